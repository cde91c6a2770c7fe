#include "lgtt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "lgtt/smith.hpp"

namespace lgtt {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string gaussian_to_string(const GaussianRational& c) {
    if (c.im == 0) return rational_to_string(c.re);
    std::ostringstream os;
    os << "(" << rational_to_string(c.re);
    os << (c.im < 0 ? "-" : "+") << rational_to_string(abs(c.im)) << "i)";
    return os.str();
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

bool grevlex_less(const ExponentVector& a, const ExponentVector& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // equal degree: a < b iff the last nonzero entry of a-b is positive
    for (std::size_t k = a.size(); k-- > 0;) {
        long d = a.e[k] - b.e[k];
        if (d != 0) return d > 0;
    }
    return false;
}

bool LaurentPolynomial::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        if (!m.is_polynomial()) return false;
    return true;
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0 &&
           terms_.begin()->first == ExponentVector::zero(nvars());
}

void LaurentPolynomial::set_term(const ExponentVector& m, const GaussianRational& c) {
    if (m.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void LaurentPolynomial::add_term(const ExponentVector& m, const GaussianRational& c) {
    if (m.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational LaurentPolynomial::coeff(const ExponentVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const GaussianRational& c) const {
    LaurentPolynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::divided_by(const LaurentPolynomial& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!o.is_monomial()) throw std::invalid_argument("division only by constants or monomials");
    const auto& [md, cd] = *o.terms_.begin();
    LaurentPolynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m - md] = c / cd;
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(long k) const {
    if (k < 0) {
        if (!is_monomial()) throw std::invalid_argument("negative power of a non-monomial");
        LaurentPolynomial one(vars_);
        one.set_term(ExponentVector::zero(nvars()), GaussianRational(1));
        return one.divided_by(*this).pow(-k);
    }
    LaurentPolynomial r(vars_);
    r.set_term(ExponentVector::zero(nvars()), GaussianRational(1));
    LaurentPolynomial b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::complex<double> LaurentPolynomial::evaluate(const std::vector<std::complex<double>>& z) const {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t i = 0; i < m.size(); ++i) {
            long e = m[i];
            if (e == 0) continue;
            t *= std::pow(z[i], static_cast<double>(e));
        }
        acc += t;
    }
    return acc;
}

GaussianRational LaurentPolynomial::evaluate_exact(const std::vector<GaussianRational>& z) const {
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            long e = m[i];
            GaussianRational b = z[i];
            if (e < 0) {
                b = GaussianRational(1) / b;
                e = -e;
            }
            for (long k = 0; k < e; ++k) t *= b;
        }
        acc += t;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::restrict_to_zero(const std::vector<std::size_t>& kill) const {
    LaurentPolynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (std::size_t i : kill) {
            if (m[i] < 0) throw std::domain_error("cannot set a variable with poles to zero");
            if (m[i] > 0) {
                keep = false;
                break;
            }
        }
        if (keep) r.terms_[m] = c;
    }
    return r;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExponentVector, GaussianRational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return grevlex_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        if (!first) os << " + ";
        first = false;
        os << gaussian_to_string(t->second);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (t->first[i] == 0) continue;
            os << "*" << vars_[i];
            if (t->first[i] != 1) os << "^" << t->first[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    explicit Parser(const std::string& t, const std::vector<std::string>& v) : text(t), vars(v) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    LaurentPolynomial constant(const GaussianRational& c) const {
        LaurentPolynomial p(vars);
        p.set_term(ExponentVector::zero(vars.size()), c);
        return p;
    }

    LaurentPolynomial parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPolynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    LaurentPolynomial parse_term() {
        LaurentPolynomial acc = parse_factor();
        while (true) {
            if (eat('*'))
                acc = acc * parse_factor();
            else if (eat('/')) {
                LaurentPolynomial d = parse_factor();
                if (d.is_zero()) fail("division by zero");
                if (!d.is_monomial()) fail("division only by constants or monomials");
                acc = acc.divided_by(d);
            } else
                break;
        }
        return acc;
    }

    LaurentPolynomial parse_factor() {
        LaurentPolynomial base = parse_primary();
        if (eat('^')) {
            long k = parse_int();
            base = base.pow(k);
        }
        return base;
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        if (eat('(')) {
            long v = parse_int();
            if (!eat(')')) fail("expected ')' after exponent");
            return neg ? -v : v;
        }
        std::size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == s) fail("expected integer exponent");
        long v = std::stol(text.substr(s, pos - s));
        return neg ? -v : v;
    }

    LaurentPolynomial parse_primary() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            LaurentPolynomial p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos;
            return -parse_primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return constant(GaussianRational(Rational(Integer(text.substr(s, pos - s)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t s = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(s, pos - s);
            if (name == "i") return constant(GaussianRational(Rational(0), Rational(1)));
            for (std::size_t k = 0; k < vars.size(); ++k) {
                if (vars[k] == name) {
                    LaurentPolynomial p(vars);
                    ExponentVector m = ExponentVector::zero(vars.size());
                    m[k] = 1;
                    p.set_term(m, GaussianRational(1));
                    return p;
                }
            }
            pos = s;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(const std::string& text,
                                           const std::vector<std::string>& vars) {
    Parser p(text, vars);
    LaurentPolynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------------------

LaurentPolynomial partial_derivative(const LaurentPolynomial& p, std::size_t i, bool logarithmic) {
    if (i >= p.nvars()) throw std::out_of_range("variable index out of range");
    LaurentPolynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        GaussianRational nc = c * GaussianRational(Rational(m[i]));
        ExponentVector nm = m;
        if (!logarithmic) nm[i] -= 1;
        r.add_term(nm, nc);
    }
    return r;
}

Rational WeightSystem::weight_of(const ExponentVector& m) const {
    Rational w = 0;
    for (std::size_t i = 0; i < q.size(); ++i) w += q[i] * Rational(m[i]);
    return w;
}

std::optional<WeightSystem> quasi_weights(const LaurentPolynomial& p) {
    if (p.is_zero() || !p.is_polynomial()) return std::nullopt;
    std::size_t n = p.nvars();
    // solve A q = 1 by exact Gaussian elimination on the augmented system
    std::vector<std::vector<Rational>> m;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Rational> row;
        for (std::size_t i = 0; i < n; ++i) row.push_back(Rational(e[i]));
        row.push_back(Rational(1));
        m.push_back(std::move(row));
    }
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][n] != 0) return std::nullopt;  // inconsistent
    if (pivot_col.size() < n) return std::nullopt;  // weights not uniquely determined
    WeightSystem w;
    w.q.assign(n, Rational(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        Rational qi = m[k][n] / m[k][pivot_col[k]];
        if (qi <= 0) return std::nullopt;
        w.q[pivot_col[k]] = qi;
    }
    Integer d = 1;
    for (const auto& qi : w.q) d = lcm(d, denominator(qi));
    w.degree = d;
    return w;
}

InvertibleClassification classify_invertible(const LaurentPolynomial& p) {
    InvertibleClassification out;
    if (!p.is_polynomial()) {
        out.reason = "not a polynomial";
        return out;
    }
    std::size_t n = p.nvars();
    if (p.terms().size() != n) {
        out.reason = "term count " + std::to_string(p.terms().size()) + " != variable count " +
                     std::to_string(n);
        return out;
    }
    IntMatrix a;
    std::vector<ExponentVector> mons;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Integer> row;
        for (std::size_t i = 0; i < n; ++i) row.push_back(Integer(e[i]));
        a.push_back(std::move(row));
        mons.push_back(e);
    }
    if (int_rank(a) != static_cast<long>(n)) {
        out.reason = "exponent matrix rank deficit";
        return out;
    }
    // each monomial must be z_i^a or z_i^a * z_j
    std::vector<long> head_var(n, -1), head_exp(n, 0), tail_var(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& m = mons[k];
        std::vector<std::size_t> supp;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) supp.push_back(i);
        long hv = -1, tv = -1, he = 0;
        if (supp.size() == 1) {
            hv = static_cast<long>(supp[0]);
            he = m[supp[0]];
        } else if (supp.size() == 2 && (m[supp[0]] == 1) != (m[supp[1]] == 1)) {
            std::size_t head = m[supp[0]] == 1 ? supp[1] : supp[0];
            std::size_t tail = m[supp[0]] == 1 ? supp[0] : supp[1];
            hv = static_cast<long>(head);
            tv = static_cast<long>(tail);
            he = m[head];
        } else {
            out.reason = "monomial " + std::to_string(k) + " is not of Fermat/loop/chain shape";
            return out;
        }
        if (head_var[hv] != -1) {
            out.reason = "two monomials share a head variable";
            return out;
        }
        head_var[hv] = static_cast<long>(k);
        head_exp[hv] = he;
        tail_var[hv] = tv;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (head_var[i] == -1) {
            out.reason = "variable " + p.vars()[i] + " heads no monomial";
            return out;
        }
    // follow head -> tail links: cycles are loops/Fermat, paths are chains
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (tail_var[i] >= 0) ++indeg[tail_var[i]];
    std::vector<bool> used(n, false);
    // chains start at a variable nobody points to
    for (std::size_t s = 0; s < n; ++s) {
        if (used[s] || indeg[s] != 0) continue;
        InvertibleBlock b;
        long v = static_cast<long>(s);
        while (v >= 0 && !used[v]) {
            used[v] = true;
            b.vars.push_back(static_cast<std::size_t>(v));
            b.exponents.push_back(head_exp[v]);
            v = tail_var[v];
        }
        if (v >= 0) {
            out.reason = "chain runs into a cycle";  // degenerate shape
            return out;
        }
        b.kind = b.vars.size() == 1 && tail_var[b.vars[0]] < 0 ? InvertibleBlock::Fermat
                                                               : InvertibleBlock::Chain;
        out.blocks.push_back(std::move(b));
    }
    // remaining variables form cycles
    for (std::size_t s = 0; s < n; ++s) {
        if (used[s]) continue;
        InvertibleBlock b;
        long v = static_cast<long>(s);
        while (!used[v]) {
            used[v] = true;
            b.vars.push_back(static_cast<std::size_t>(v));
            b.exponents.push_back(head_exp[v]);
            v = tail_var[v];
            if (v < 0) {
                out.reason = "broken cycle";
                return out;
            }
        }
        if (v != static_cast<long>(s)) {
            out.reason = "cycle does not close on its start";
            return out;
        }
        b.kind = b.vars.size() == 1 ? InvertibleBlock::Fermat : InvertibleBlock::Loop;
        out.blocks.push_back(std::move(b));
    }
    out.invertible = true;
    return out;
}

// fractional part in [0,1)
static Rational mod_one(const Rational& x) {
    Integer num = numerator(x), den = denominator(x);
    Integer fl;
    if (num >= 0)
        fl = num / den;
    else
        fl = -Integer((-num + den - 1) / den);
    return x - Rational(fl);
}

bool DiagonalSymmetryGroup::contains(const std::vector<Rational>& phase,
                                     const LaurentPolynomial& p) const {
    for (const auto& [m, c] : p.terms()) {
        Rational s = 0;
        for (std::size_t i = 0; i < phase.size(); ++i) s += phase[i] * Rational(m[i]);
        if (denominator(s) != 1) return false;
    }
    return true;
}

DiagonalSymmetryGroup diagonal_symmetries(const LaurentPolynomial& p) {
    std::size_t n = p.nvars();
    IntMatrix a;
    for (const auto& [e, c] : p.terms()) {
        std::vector<Integer> row;
        for (std::size_t i = 0; i < n; ++i) row.push_back(Integer(e[i]));
        a.push_back(std::move(row));
    }
    if (int_rank(a) != static_cast<long>(n))
        throw std::domain_error("diagonal symmetry group is infinite (exponent rank < n)");
    // A theta = 0 mod 1  <=>  theta = V e_i / d_i with S = U A V
    SmithResult snf = smith_normal_form(a);
    DiagonalSymmetryGroup g;
    g.order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = snf.s[i][i];
        g.order *= d;
        if (d <= 1) continue;
        std::vector<Rational> gen(n);
        for (std::size_t r = 0; r < n; ++r) gen[r] = mod_one(Rational(snf.v[r][i], d));
        g.generators.push_back(std::move(gen));
        g.orders.push_back(d);
    }
    auto w = quasi_weights(p);
    if (w) {
        g.j_element.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.j_element[i] = mod_one(w->q[i]);
    }
    return g;
}

TwistedSector twisted_sector(const LaurentPolynomial& p, const std::vector<Rational>& phase) {
    if (phase.size() != p.nvars()) throw std::invalid_argument("phase vector length mismatch");
    DiagonalSymmetryGroup g;  // membership check does not need the group itself
    if (!g.contains(phase, p)) throw std::domain_error("phase vector is not a symmetry of p");
    TwistedSector s;
    std::vector<std::size_t> kill;
    for (std::size_t i = 0; i < phase.size(); ++i) {
        if (mod_one(phase[i]) == 0)
            s.fixed_vars.push_back(i);
        else
            kill.push_back(i);
    }
    s.restriction = p.restrict_to_zero(kill);
    s.n_fixed = s.fixed_vars.size();
    return s;
}

// ---------------------------------------------------------------------------
// CPoly

std::complex<double> CPoly::evaluate(const std::vector<std::complex<double>>& z) const {
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms) {
        std::complex<double> t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            t *= std::pow(z[i], static_cast<double>(m[i]));
        }
        acc += t;
    }
    return acc;
}

std::complex<double> CPoly::eval1(std::complex<double> z) const {
    if (vars.size() != 1) throw std::logic_error("eval1 requires one variable");
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms) {
        long e = m[0];
        if (e == 0)
            acc += c;
        else
            acc += c * std::pow(z, static_cast<double>(e));
    }
    return acc;
}

CPoly CPoly::derivative1() const {
    if (vars.size() != 1) throw std::logic_error("derivative1 requires one variable");
    CPoly r{vars, {}};
    for (const auto& [m, c] : terms) {
        if (m[0] == 0) continue;
        ExponentVector nm = m;
        nm[0] -= 1;
        r.terms.emplace_back(nm, c * static_cast<double>(m[0]));
    }
    return r;
}

long CPoly::degree1() const {
    long d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m[0]);
    return d;
}

std::vector<std::complex<double>> CPoly::dense1() const {
    if (vars.size() != 1) throw std::logic_error("dense1 requires one variable");
    long deg = degree1();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(deg) + 1, 0.0);
    for (const auto& [m, x] : terms) {
        if (m[0] < 0) throw std::logic_error("dense1 requires a polynomial");
        c[static_cast<std::size_t>(m[0])] += x;
    }
    return c;
}

CPoly to_cpoly(const LaurentPolynomial& p) {
    CPoly r{p.vars(), {}};
    for (const auto& [m, c] : p.terms()) r.terms.emplace_back(m, c.to_complex());
    return r;
}

CPoly DeformationFamily::member(const std::vector<std::complex<double>>& tt) const {
    if (tt.size() != deformers.size()) throw std::invalid_argument("parameter count mismatch");
    // accumulate exactly on exponent vectors, then convert
    std::map<ExponentVector, std::complex<double>> acc;
    for (const auto& [m, c] : base.terms()) acc[m] += c.to_complex();
    for (std::size_t i = 0; i < deformers.size(); ++i)
        for (const auto& [m, c] : deformers[i].terms()) acc[m] += tt[i] * c.to_complex();
    CPoly r{base.vars(), {}};
    for (const auto& [m, c] : acc)
        if (std::abs(c) != 0.0) r.terms.emplace_back(m, c);
    return r;
}

LaurentPolynomial DeformationFamily::member_exact(const std::vector<GaussianRational>& tt) const {
    if (tt.size() != deformers.size()) throw std::invalid_argument("parameter count mismatch");
    LaurentPolynomial r = base;
    for (std::size_t i = 0; i < deformers.size(); ++i) r = r + deformers[i].scaled(tt[i]);
    return r;
}

}  // namespace lgtt
