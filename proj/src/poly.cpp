#include "distideal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace di {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
}

int VarContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return int(i);
    return -1;
}

VarContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

VarContextPtr x_context(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return make_context(std::move(names));
}

VarContextPtr t_context() { return make_context({"t"}); }

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    // degrevlex: smaller in the last differing exponent wins.
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return compare_monomials(a.exp, b.exp, MonomialOrder::Degrevlex) > 0;
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coef == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

MultiPoly MultiPoly::constant(VarContextPtr ctx, const mpz_class& c) {
    MultiPoly p(ctx);
    if (c != 0) p.terms_.push_back(Term{Exponents(ctx->arity(), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(VarContextPtr ctx, int index) {
    if (index < 0 || size_t(index) >= ctx->arity())
        throw std::invalid_argument("variable index out of range");
    MultiPoly p(ctx);
    Exponents e(ctx->arity(), 0);
    e[index] = 1;
    p.terms_.push_back(Term{std::move(e), 1});
    return p;
}

MultiPoly MultiPoly::from_terms(VarContextPtr ctx, std::vector<Term> terms) {
    MultiPoly p(ctx);
    for (const auto& t : terms)
        if (t.exp.size() != ctx->arity())
            throw std::invalid_argument("exponent arity mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

mpz_class MultiPoly::constant_value() const {
    for (const auto& t : terms_)
        if (total_degree(t.exp) == 0) return t.coef;
    return 0;
}

int MultiPoly::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
    return d;
}

const Term& MultiPoly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    if (order == MonomialOrder::Degrevlex) return terms_.front();
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (compare_monomials(t.exp, best->exp, order) > 0) best = &t;
    return *best;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly p = *this;
    if (!p.ctx_) p.ctx_ = o.ctx_;
    p.terms_.insert(p.terms_.end(), o.terms_.begin(), o.terms_.end());
    p.normalize();
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p(ctx_ ? ctx_ : o.ctx_);
    p.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Term t;
            t.exp.resize(a.exp.size());
            for (size_t i = 0; i < a.exp.size(); ++i) t.exp[i] = a.exp[i] + b.exp[i];
            t.coef = a.coef * b.coef;
            p.terms_.push_back(std::move(t));
        }
    p.normalize();
    return p;
}

MultiPoly MultiPoly::operator*(const mpz_class& c) const {
    if (c == 0) return MultiPoly(ctx_);
    MultiPoly p = *this;
    for (auto& t : p.terms_) t.coef *= c;
    return p;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

void MultiPoly::add_scaled(const MultiPoly& o, const mpz_class& c, const Exponents& exp) {
    if (c == 0) return;
    for (const auto& t : o.terms_) {
        Term nt;
        nt.exp.resize(t.exp.size());
        for (size_t i = 0; i < t.exp.size(); ++i) nt.exp[i] = t.exp[i] + exp[i];
        nt.coef = t.coef * c;
        terms_.push_back(std::move(nt));
    }
    normalize();
}

mpz_class MultiPoly::evaluate(const std::vector<mpz_class>& point) const {
    if (ctx_ && point.size() != ctx_->arity())
        throw std::invalid_argument("evaluation arity mismatch");
    mpz_class sum = 0;
    for (const auto& t : terms_) {
        mpz_class v = t.coef;
        for (size_t i = 0; i < t.exp.size(); ++i)
            for (int e = 0; e < t.exp[i]; ++e) v *= point[i];
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::collapse_to_t() const {
    auto ctx = t_context();
    std::vector<Term> terms;
    for (const auto& t : terms_)
        terms.push_back(Term{Exponents{total_degree(t.exp)}, t.coef});
    return from_terms(ctx, std::move(terms));
}

MultiPoly MultiPoly::remap(VarContextPtr target, const std::vector<int>& var_map) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
        Exponents e(target->arity(), 0);
        for (size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (i >= var_map.size() || var_map[i] < 0 ||
                size_t(var_map[i]) >= target->arity())
                throw std::invalid_argument("variable map out of range");
            e[var_map[i]] += t.exp[i];
        }
        terms.push_back(Term{std::move(e), t.coef});
    }
    return from_terms(std::move(target), std::move(terms));
}

std::string MultiPoly::str(MonomialOrder order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [order](const Term* a, const Term* b) {
        return compare_monomials(a->exp, b->exp, order) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : sorted) {
        mpz_class c = t->coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        std::vector<std::string> factors;
        if (c != 1 || total_degree(t->exp) == 0) factors.push_back(c.get_str());
        for (size_t i = 0; i < t->exp.size(); ++i) {
            if (t->exp[i] == 0) continue;
            std::string f = ctx_->name(i);
            if (t->exp[i] > 1) f += "^" + std::to_string(t->exp[i]);
            factors.push_back(f);
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
        first = false;
    }
    return os.str();
}

namespace {

struct PolyParser {
    const VarContextPtr& ctx;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Term parse_term() {
        Term t{Exponents(ctx->arity(), 0), 1};
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                t.coef *= mpz_class(s.substr(start, pos - start));
                any_factor = true;
            } else if (pos < s.size() &&
                       (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                size_t start = pos;
                while (pos < s.size() &&
                       (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                    ++pos;
                std::string name = s.substr(start, pos - start);
                int idx = ctx->index_of(name);
                if (idx < 0) fail("unknown variable " + name);
                int e = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    skip_ws();
                    size_t d0 = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (d0 == pos) fail("missing exponent");
                    e = std::stoi(s.substr(d0, pos - d0));
                }
                t.exp[idx] += e;
                any_factor = true;
            } else {
                break;
            }
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any_factor) fail("expected term");
        return t;
    }

    MultiPoly parse() {
        std::vector<Term> terms;
        skip_ws();
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        while (true) {
            Term t = parse_term();
            t.coef *= sign;
            terms.push_back(std::move(t));
            skip_ws();
            if (pos >= s.size()) break;
            if (s[pos] == '+') sign = 1;
            else if (s[pos] == '-') sign = -1;
            else fail("expected + or -");
            ++pos;
        }
        return MultiPoly::from_terms(ctx, std::move(terms));
    }
};

}  // namespace

MultiPoly parse_poly(const VarContextPtr& ctx, const std::string& text) {
    std::string trimmed = text;
    // Allow "0" as the zero polynomial.
    size_t a = trimmed.find_first_not_of(" \t\r\n");
    size_t b = trimmed.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) throw std::invalid_argument("empty polynomial text");
    if (trimmed.substr(a, b - a + 1) == "0") return MultiPoly(ctx);
    PolyParser parser{ctx, text};
    MultiPoly p = parser.parse();
    return p;
}

SymMatrix::SymMatrix(VarContextPtr ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
    data_.assign(size_t(rows) * cols, MultiPoly(ctx_));
}

BigMatrix SymMatrix::evaluate(const std::vector<mpz_class>& point) const {
    BigMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

SymMatrix dx_matrix(const Digraph& g) {
    const auto dist = distance_table(g);
    const int n = g.order();
    auto ctx = x_context(n);
    SymMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (i == j) ? MultiPoly::variable(ctx, i)
                                  : MultiPoly::constant(ctx, dist[i][j]);
    return m;
}

SymMatrix dt_matrix(const Digraph& g) {
    const auto dist = distance_table(g);
    const int n = g.order();
    auto ctx = t_context();
    SymMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (i == j) ? MultiPoly::variable(ctx, 0)
                                  : MultiPoly::constant(ctx, dist[i][j]);
    return m;
}

namespace {

// det of rows r.. over the column subset `cols`, expanding along row r.
MultiPoly laplace(const SymMatrix& m, int r, uint32_t cols,
                  std::unordered_map<uint32_t, MultiPoly>& memo) {
    const int n = m.rows();
    if (r == n) return MultiPoly::constant(m.context(), 1);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    MultiPoly det(m.context());
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (!((cols >> j) & 1u)) continue;
        if (!m.at(r, j).is_zero()) {
            MultiPoly sub = laplace(m, r + 1, cols & ~(uint32_t(1) << j), memo);
            MultiPoly contrib = m.at(r, j) * sub;
            det = (sign > 0) ? det + contrib : det - contrib;
        }
        sign = -sign;
    }
    memo.emplace(cols, det);
    return det;
}

}  // namespace

MultiPoly sym_det(const SymMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("sym_det requires a square matrix");
    if (m.rows() > 12) throw std::invalid_argument("sym_det is capped at 12 x 12");
    if (m.rows() == 0) return MultiPoly::constant(m.context(), 1);
    std::unordered_map<uint32_t, MultiPoly> memo;
    return laplace(m, 0, (uint32_t(1) << m.rows()) - 1, memo);
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
    const int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double binomial_approx(int n, int k) {
    double v = 1;
    for (int i = 0; i < k; ++i) v *= double(n - i) / (i + 1);
    return v;
}

}  // namespace

std::vector<MultiPoly> minors(const SymMatrix& m, int k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("minor order out of range");
    if (binomial_approx(m.rows(), k) * binomial_approx(m.cols(), k) > 1e6)
        throw std::invalid_argument("minor enumeration cap exceeded");

    std::vector<MultiPoly> result;
    std::vector<int> rows(k), cols(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            SymMatrix sub(m.context(), k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
            result.push_back(sym_det(sub));
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return result;
}

}  // namespace di
