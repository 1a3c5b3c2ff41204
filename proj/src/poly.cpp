#include "iwa/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace iwa {

void GradedPoly::normalize() {
    if (!ring_) throw std::invalid_argument("GradedPoly: missing ring");
    for (auto& t : terms_)
        if (t.e.size() != ring_->nvars())
            throw std::invalid_argument("GradedPoly: exponent arity mismatch");
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.e, b.e, *ring_) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        std::uint32_t c = t.c % ring_->p;
        if (!out.empty() && out.back().e == t.e) {
            out.back().c = fp::add(out.back().c, c, ring_->p);
            if (out.back().c == 0) out.pop_back();
        } else if (c) {
            out.push_back({t.e, c});
        }
    }
    terms_ = std::move(out);
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = fp::neg(t.c, ring_->p);
    return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    check_ring(o);
    const std::uint32_t p = ring_->p;
    GradedPoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].e, o.terms_[j].e, *ring_);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = fp::add(terms_[i].c, o.terms_[j].c, p);
            if (s) r.terms_.push_back({terms_[i].e, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    check_ring(o);
    const std::uint32_t p = ring_->p;
    // Accumulate in a map keyed by exponent; fine at the scale we run at.
    std::map<Expo, std::uint32_t> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Expo e = mono_mul(a.e, b.e);
            std::uint32_t& slot = acc[std::move(e)];
            slot = fp::add(slot, fp::mul(a.c, b.c, p), p);
        }
    GradedPoly r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c) r.terms_.push_back({e, c});
    std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& x, const Term& y) {
        return mono_cmp(x.e, y.e, *ring_) > 0;
    });
    return r;
}

GradedPoly GradedPoly::scaled(std::uint32_t c) const {
    c %= ring_->p;
    GradedPoly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = fp::mul(t.c, c, ring_->p);
    return r;
}

GradedPoly GradedPoly::term_mul(const Expo& m, std::uint32_t c) const {
    c %= ring_->p;
    GradedPoly r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_)
        r.terms_.push_back({mono_mul(t.e, m), fp::mul(t.c, c, ring_->p)});
    return r;
}

GradedPoly GradedPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp::inv(lc(), ring_->p));
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (*ring_ != *o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != o.terms_[i].c || terms_[i].e != o.terms_[i].e) return false;
    return true;
}

bool GradedPoly::operator<(const GradedPoly& o) const {
    // compare term lists lexicographically under the monomial order
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = mono_cmp(terms_[i].e, o.terms_[i].e, *ring_);
        if (c != 0) return c < 0;
        if (terms_[i].c != o.terms_[i].c) return terms_[i].c < o.terms_[i].c;
    }
    return terms_.size() < o.terms_.size();
}

std::uint32_t GradedPoly::coeff(const Expo& e) const {
    for (auto& t : terms_)
        if (t.e == e) return t.c;
    return 0;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_var = !mono_is_one(t.e);
        bool printed = false;
        if (t.c != 1 || !has_var) {
            os << t.c;
            printed = true;
        }
        for (std::size_t i = 0; i < t.e.size(); ++i) {
            if (!t.e[i]) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.e[i] > 1) os << "^" << t.e[i];
            printed = true;
        }
    }
    return os.str();
}

std::optional<GradedPoly> GradedPoly::divide_exact(const GradedPoly& f, const GradedPoly& g) {
    f.check_ring(g);
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero");
    GradedPoly r = f, q(f.ring());
    const std::uint32_t p = f.ring()->p;
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        if (!mono_divides(g.lm(), r.lm())) return std::nullopt;
        Expo m = mono_div(r.lm(), g.lm());
        std::uint32_t c = fp::div(r.lc(), g.lc(), p);
        qterms.push_back({m, c});
        r = r - g.term_mul(m, c);
    }
    return GradedPoly(f.ring(), std::move(qterms));
}

// ---- tiny recursive-descent parser: +, -, *, ^, parentheses, integers, names ----

namespace {

struct PParser {
    const RingPtr& R;
    const std::string& s;
    std::size_t i = 0;

    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse_poly: " + msg + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }

    GradedPoly expr() {
        GradedPoly acc = term(eat('-'));
        while (true) {
            skip();
            if (eat('+')) acc += term(false);
            else if (eat('-')) acc += term(true);
            else break;
        }
        return acc;
    }

    GradedPoly term(bool negated) {
        GradedPoly acc = factor();
        while (true) {
            skip();
            if (eat('*')) acc *= factor();
            else break;
        }
        return negated ? -acc : acc;
    }

    GradedPoly factor() {
        GradedPoly base = atom();
        skip();
        if (eat('^')) {
            skip();
            std::size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (j == i) fail("expected exponent");
            unsigned long e = std::stoul(s.substr(j, i - j));
            GradedPoly r = GradedPoly::constant(R, 1);
            for (unsigned long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    GradedPoly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            GradedPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            return GradedPoly::constant(R, std::stoll(s.substr(j, i - j)));
        }
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            std::size_t j = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string name = s.substr(j, i - j);
            for (std::size_t v = 0; v < R->nvars(); ++v)
                if (R->vars[v] == name) return GradedPoly::variable(R, v);
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

} // namespace

GradedPoly parse_poly(const RingPtr& R, const std::string& text) {
    PParser P{R, text};
    GradedPoly f = P.expr();
    P.skip();
    if (P.i != text.size()) P.fail("trailing input");
    return f;
}

} // namespace iwa
