// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace instanton {

// ---------------------------------------------------------------------------
// Monomial helpers
// ---------------------------------------------------------------------------

std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

bool monomial_divides(const Monomial& divisor, const Monomial& dividend) {
    for (std::size_t k = 0; k < divisor.size(); ++k)
        if (divisor[k] > dividend[k]) return false;
    return true;
}

Monomial monomial_div(const Monomial& dividend, const Monomial& divisor) {
    Monomial out(dividend.size());
    for (std::size_t k = 0; k < dividend.size(); ++k) out[k] = dividend[k] - divisor[k];
    return out;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
    return out;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0 && b[k] != 0) return false;
    return true;
}

int monomial_cmp(MonomialOrder order, const Monomial& a, const Monomial& b) {
    if (order == MonomialOrder::lex) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: compare total degree, then the *last* differing exponent with
    // the smaller entry wins.
    const std::uint64_t da = total_degree(a);
    const std::uint64_t db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// PolyRing
// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
    for (std::size_t k = 0; k < names_.size(); ++k) {
        const std::string& n = names_[k];
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (n == "i") throw std::invalid_argument("variable name 'i' is reserved for the imaginary unit");
        if (!index_.emplace(n, k).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
}

std::shared_ptr<const PolyRing> PolyRing::create(std::vector<std::string> names,
                                                 MonomialOrder order) {
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(names), order));
}

std::shared_ptr<const PolyRing> PolyRing::with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order() == order) return ring;
    return create(ring->names(), order);
}

std::shared_ptr<const PolyRing> PolyRing::with_extra_variable(const RingPtr& ring,
                                                              std::string* chosen_name) {
    std::string base = "t_rad";
    std::string name = base;
    int suffix = 0;
    while (ring->index_of(name).has_value()) name = base + "_" + std::to_string(suffix++);
    std::vector<std::string> names = ring->names();
    names.push_back(name);
    if (chosen_name) *chosen_name = name;
    return create(std::move(names), ring->order());
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Poly construction and invariants
// ---------------------------------------------------------------------------

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        throw std::invalid_argument("polynomial operands belong to different rings");
}

}  // namespace

Poly Poly::constant(RingPtr ring, GaussRational value) {
    Poly p(std::move(ring));
    if (!value.is_zero())
        p.terms_.push_back(Term{Monomial(p.ring_->nvars(), 0), std::move(value)});
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t var_index) {
    if (var_index >= ring->nvars()) throw std::out_of_range("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[var_index] = 1;
    return monomial(std::move(ring), std::move(m), GaussRational(1));
}

Poly Poly::variable(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable: " + name);
    return variable(std::move(ring), *idx);
}

Poly Poly::monomial(RingPtr ring, Monomial m, GaussRational coeff) {
    if (m.size() != ring->nvars()) throw std::invalid_argument("monomial has wrong length");
    Poly p(std::move(ring));
    if (!coeff.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(coeff)});
    return p;
}

Poly Poly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_->cmp(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

long Poly::degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(total_degree(t.mono)));
    return d;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

GaussRational Poly::constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
    return terms_[0].coeff;
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

Poly Poly::operator-() const {
    Poly out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    return add_scaled(o, GaussRational(1), Monomial(ring_->nvars(), 0));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    return add_scaled(o, GaussRational(-1), Monomial(ring_->nvars(), 0));
}

Poly Poly::add_scaled(const Poly& g, const GaussRational& s, const Monomial& shift) const {
    require_same_ring(ring_, g.ring_);
    if (s.is_zero() || g.is_zero()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t a = 0, b = 0;
    const bool trivial_shift = total_degree(shift) == 0;
    auto shifted = [&](std::size_t k) {
        return trivial_shift ? g.terms_[k].mono : monomial_mul(g.terms_[k].mono, shift);
    };
    Monomial bm;
    if (b < g.terms_.size()) bm = shifted(b);
    while (a < terms_.size() && b < g.terms_.size()) {
        const int c = ring_->cmp(terms_[a].mono, bm);
        if (c > 0) {
            out.push_back(terms_[a++]);
        } else if (c < 0) {
            out.push_back(Term{bm, s * g.terms_[b].coeff});
            if (++b < g.terms_.size()) bm = shifted(b);
        } else {
            GaussRational coeff = terms_[a].coeff + s * g.terms_[b].coeff;
            if (!coeff.is_zero()) out.push_back(Term{terms_[a].mono, std::move(coeff)});
            ++a;
            if (++b < g.terms_.size()) bm = shifted(b);
        }
    }
    for (; a < terms_.size(); ++a) out.push_back(terms_[a]);
    for (; b < g.terms_.size(); ++b) {
        out.push_back(Term{shifted(b), s * g.terms_[b].coeff});
    }
    return from_sorted_terms(ring_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    auto desc = [this](const Monomial& a, const Monomial& b) { return ring_->cmp(a, b) > 0; };
    std::map<Monomial, GaussRational, decltype(desc)> acc(desc);
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            Monomial m = monomial_mul(ta.mono, tb.mono);
            GaussRational c = ta.coeff * tb.coeff;
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh) it->second = it->second + c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
    return from_sorted_terms(ring_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].mono != o.terms_[k].mono || !(terms_[k].coeff == o.terms_[k].coeff))
            return false;
    return true;
}

Poly Poly::scaled(const GaussRational& s) const {
    if (s.is_zero()) return Poly(ring_);
    Poly out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, s * t.coeff});
    return out;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly result = constant(ring_, GaussRational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::monic() const {
    const GaussRational& lc = leading_coeff();
    return scaled(lc.inverse());
}

// ---------------------------------------------------------------------------
// Evaluation / substitution
// ---------------------------------------------------------------------------

GaussRational Poly::evaluate(const std::vector<std::optional<GaussRational>>& point) const {
    if (point.size() != ring_->nvars())
        throw std::invalid_argument("evaluation point has wrong length");
    GaussRational acc(0);
    for (const auto& t : terms_) {
        GaussRational v = t.coeff;
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k] == 0) continue;
            if (!point[k])
                throw std::invalid_argument("evaluate: no value assigned to variable " +
                                            ring_->name(k));
            GaussRational p(1);
            for (std::uint32_t e = 0; e < t.mono[k]; ++e) p = p * *point[k];
            v = v * p;
        }
        acc = acc + v;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<std::optional<Poly>>& images) const {
    if (images.size() != ring_->nvars())
        throw std::invalid_argument("substitution map has wrong length");
    for (const auto& im : images)
        if (im) require_same_ring(ring_, im->ring());
    Poly acc(ring_);
    for (const auto& t : terms_) {
        Poly v = constant(ring_, t.coeff);
        for (std::size_t k = 0; k < t.mono.size(); ++k) {
            if (t.mono[k] == 0) continue;
            Poly base = images[k] ? *images[k] : variable(ring_, k);
            v = v * base.pow(t.mono[k]);
        }
        acc = acc + v;
    }
    return acc;
}

Poly Poly::lift_to(const RingPtr& target) const {
    if (target.get() == ring_.get()) return *this;
    std::vector<std::size_t> where(ring_->nvars());
    for (std::size_t k = 0; k < ring_->nvars(); ++k) {
        auto idx = target->index_of(ring_->name(k));
        if (!idx)
            throw std::invalid_argument("lift_to: target ring lacks variable " + ring_->name(k));
        where[k] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars(), 0);
        for (std::size_t k = 0; k < t.mono.size(); ++k) m[where[k]] = t.mono[k];
        out.push_back(Term{std::move(m), t.coeff});
    }
    Poly p(target);
    p.terms_ = std::move(out);
    p.normalize();
    return p;
}

long Poly::degree_in(std::size_t var_index) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.mono[var_index]));
    return d;
}

bool Poly::contains_var(std::size_t var_index) const {
    for (const auto& t : terms_)
        if (t.mono[var_index] != 0) return true;
    return false;
}

Poly Poly::coefficient_of(const std::vector<std::size_t>& vars,
                          const std::vector<std::uint32_t>& exps) const {
    if (vars.size() != exps.size())
        throw std::invalid_argument("coefficient_of: vars/exps length mismatch");
    Poly out(ring_);
    for (const auto& t : terms_) {
        bool match = true;
        for (std::size_t k = 0; k < vars.size() && match; ++k)
            match = t.mono[vars[k]] == exps[k];
        if (!match) continue;
        Term copy = t;
        for (std::size_t v : vars) copy.mono[v] = 0;
        out.terms_.push_back(std::move(copy));
    }
    out.normalize();
    return out;
}

bool Poly::homogeneous_in(const std::vector<std::size_t>& vars) const {
    if (terms_.empty()) return true;
    std::optional<std::uint64_t> deg;
    for (const auto& t : terms_) {
        std::uint64_t d = 0;
        for (std::size_t v : vars) d += t.mono[v];
        if (!deg) deg = d;
        else if (*deg != d) return false;
    }
    return true;
}

std::optional<Poly> try_exact_div(const Poly& f, const Poly& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly rem = f;
    Poly quot(f.ring());
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        const Term& gt = g.leading_term();
        if (!monomial_divides(gt.mono, lt.mono)) return std::nullopt;
        const Monomial shift = monomial_div(lt.mono, gt.mono);
        const GaussRational coef = lt.coeff / gt.coeff;
        quot = quot + Poly::monomial(f.ring(), shift, coef);
        rem = rem.add_scaled(g, -coef, shift);
    }
    return quot;
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto q = try_exact_div(f, g);
    if (!q) throw std::domain_error("exact_div: divisor does not divide dividend");
    return *q;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

std::string monomial_string(const PolyRing& ring, const Monomial& m) {
    std::string out;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.name(k);
        if (m[k] > 1) out += "^" + std::to_string(m[k]);
    }
    return out;
}

std::string term_string(const PolyRing& ring, const Term& t) {
    const std::string mono = monomial_string(ring, t.mono);
    if (mono.empty()) return t.coeff.to_string();
    const GaussRational& c = t.coeff;
    if (c.is_one()) return mono;
    if ((-c).is_one()) return "-" + mono;
    const bool mixed = !c.re().is_zero() && !c.im().is_zero();
    if (mixed) return "(" + c.to_string() + ")*" + mono;
    return c.to_string() + "*" + mono;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        std::string s = term_string(*ring_, terms_[k]);
        if (k == 0) {
            out = s;
        } else if (!s.empty() && s[0] == '-') {
            out += " - " + s.substr(1);
        } else {
            out += " + " + s;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly parse_expr() {
        bool neg = accept('-');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (accept('^')) {
            return base.pow(parse_uint32());
        }
        return base;
    }

    Poly parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        fail("expected a rational, 'i', a variable, or '('");
    }

    Poly parse_rational() {
        std::string num = parse_digits();
        std::string text = num;
        if (accept('/')) {
            skip_ws();
            text += "/" + parse_digits();
        }
        return Poly::constant(ring_, GaussRational(BigRational::from_string(text)));
    }

    std::string parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    std::uint32_t parse_uint32() {
        const std::size_t at = pos_;
        std::string digits = parse_digits();
        unsigned long v = 0;
        try {
            v = std::stoul(digits);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", at);
        }
        if (v > 0xffffffffUL) throw ParseError("exponent out of range", at);
        return static_cast<std::uint32_t>(v);
    }

    Poly parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "i") return Poly::constant(ring_, GaussRational::i());
        auto idx = ring_->index_of(name);
        if (!idx) throw ParseError("unknown variable: " + name, start);
        return Poly::variable(ring_, *idx);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

GaussRational parse_scalar(const std::string& text) {
    static const RingPtr kEmptyRing = PolyRing::create({});
    Poly p = parse_poly(text, kEmptyRing);
    return p.constant_value();
}

// ---------------------------------------------------------------------------
// Truncated series / Chern data
// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t cap, BigRational constant)
    : coeff_(cap + 1, BigRational(0)) {
    coeff_[0] = std::move(constant);
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
    if (cap() != o.cap()) throw std::invalid_argument("series caps differ");
    TruncatedSeries out(cap(), BigRational(0));
    for (std::size_t a = 0; a < coeff_.size(); ++a) {
        if (coeff_[a].is_zero()) continue;
        for (std::size_t b = 0; a + b < coeff_.size(); ++b) {
            if (o.coeff_[b].is_zero()) continue;
            out.coeff_[a + b] = out.coeff_[a + b] + coeff_[a] * o.coeff_[b];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(std::uint32_t e) const {
    TruncatedSeries result = one(cap());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1u) result = result.mul(base);
        e >>= 1u;
        if (e > 0) base = base.mul(base);
    }
    return result;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeff_.size(); ++k) {
        if (coeff_[k].is_zero()) continue;
        std::string piece;
        if (k == 0) {
            piece = coeff_[k].to_string();
        } else if (coeff_[k].is_one()) {
            piece = "t^" + std::to_string(k);
        } else {
            piece = coeff_[k].to_string() + "t^" + std::to_string(k);
        }
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries chern_series(std::uint32_t c, std::size_t cap) {
    // Geometric series 1/(1 - t^2) = 1 + t^2 + t^4 + ..., raised to the c-th
    // power with truncated arithmetic.
    TruncatedSeries geom = TruncatedSeries::one(cap);
    for (std::size_t k = 2; k <= cap; k += 2) geom.set_coeff(k, BigRational(1));
    return geom.pow(c);
}

TruncatedSeries one_minus_t2_pow(std::uint32_t c, std::size_t cap) {
    TruncatedSeries base = TruncatedSeries::one(cap);
    if (cap >= 2) base.set_coeff(2, BigRational(-1));
    return base.pow(c);
}

}  // namespace instanton
