#include "poissonkit/quantum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "poissonkit/errors.hpp"
#include "poissonkit/parse.hpp"

namespace poissonkit {

QuantumAlgebra::QuantumAlgebra(int n) : n_(n) {
    const int letters = n * n;
    rules_.resize(static_cast<std::size_t>(letters) * letters);
    for (int hi = 0; hi < letters; ++hi) {
        for (int lo = 0; lo < hi; ++lo) {
            auto [k, l] = entry(hi);
            auto [i, j] = entry(lo);
            // (i,j) < (k,l) row-major: i < k, or i == k and j < l
            std::vector<RuleTerm>& rule = rules_[static_cast<std::size_t>(hi) * letters + lo];
            if (i < k && j < l) {
                rule.push_back({LaurentScalar(1), {lo, hi}});
                LaurentScalar spread = LaurentScalar::t_power(1) - LaurentScalar::t_power(-1);
                rule.push_back({-spread, {letter(i, l), letter(k, j)}});
            } else if (i == k || j == l) {
                rule.push_back({LaurentScalar::t_power(-1), {lo, hi}});
            } else { // i < k, j > l
                rule.push_back({LaurentScalar(1), {lo, hi}});
            }
        }
    }
}

const std::vector<QuantumAlgebra::RuleTerm>& QuantumAlgebra::pair_rule(int hi, int lo) const {
    return rules_[static_cast<std::size_t>(hi) * letter_count() + lo];
}

NCPolynomial NCPolynomial::word(int n, const NCWord& w, const LaurentScalar& c) {
    NCPolynomial p(n);
    p.add_term(w, c);
    return p;
}

NCPolynomial NCPolynomial::generator(int n, int i, int j) {
    return word(n, {(i - 1) * n + (j - 1)});
}

void NCPolynomial::add_term(const NCWord& w, const LaurentScalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    if (n_ != o.n_)
        throw ContextMismatchError("mixing quantum algebras of different size");
    NCPolynomial r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add_term(w, c);
    return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const { return *this + (-o); }

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r(n_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

NCPolynomial NCPolynomial::scaled(const LaurentScalar& c) const {
    NCPolynomial r(n_);
    for (const auto& [w, coeff] : terms_)
        r.add_term(w, coeff * c);
    return r;
}

namespace {

int leftmost_inversion(const NCWord& w) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] > w[p + 1])
            return static_cast<int>(p);
    return -1;
}

template <typename PickSite>
NCPolynomial straighten(const QuantumAlgebra& alg, const NCPolynomial& p, PickSite pick) {
    NCPolynomial out(p.n());
    std::vector<std::pair<NCWord, LaurentScalar>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        int site = pick(w);
        if (site < 0) {
            out.add_term(w, c);
            continue;
        }
        const auto& rule = alg.pair_rule(w[static_cast<std::size_t>(site)],
                                         w[static_cast<std::size_t>(site) + 1]);
        for (const auto& term : rule) {
            NCWord next = w;
            next[static_cast<std::size_t>(site)] = term.letters[0];
            next[static_cast<std::size_t>(site) + 1] = term.letters[1];
            work.emplace_back(std::move(next), c * term.coeff);
        }
    }
    return out;
}

} // namespace

NCPolynomial nc_normal_form(const QuantumAlgebra& alg, const NCPolynomial& p) {
    return straighten(alg, p, leftmost_inversion);
}

NCPolynomial nc_normal_form_random_order(const QuantumAlgebra& alg, const NCPolynomial& p,
                                         std::mt19937_64& rng) {
    auto pick = [&rng](const NCWord& w) {
        std::vector<int> sites;
        for (std::size_t q = 0; q + 1 < w.size(); ++q)
            if (w[q] > w[q + 1])
                sites.push_back(static_cast<int>(q));
        if (sites.empty())
            return -1;
        return sites[static_cast<std::size_t>(rng() % sites.size())];
    };
    return straighten(alg, p, pick);
}

NCPolynomial nc_mul(const QuantumAlgebra& alg, const NCPolynomial& a, const NCPolynomial& b) {
    if (a.n() != b.n() || a.n() != alg.n())
        throw ContextMismatchError("mixing quantum algebras of different size");
    NCPolynomial raw(a.n());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            raw.add_term(w, ca * cb);
        }
    }
    return nc_normal_form(alg, raw);
}

NCPolynomial nc_commutator(const QuantumAlgebra& alg, const NCPolynomial& a,
                           const NCPolynomial& b) {
    return nc_mul(alg, a, b) - nc_mul(alg, b, a);
}

namespace {

int permutation_inversions(const std::vector<int>& p) {
    int count = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b])
                ++count;
    return count;
}

// (-t)^len coefficient of a permutation
LaurentScalar neg_t_power(int len) {
    return LaurentScalar::t_power(len, Rational(len % 2 == 0 ? 1 : -1));
}

} // namespace

NCPolynomial quantum_det(const QuantumAlgebra& alg) {
    const int n = alg.n();
    NCPolynomial det(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        NCWord w;
        for (int r = 1; r <= n; ++r)
            w.push_back(alg.letter(r, perm[static_cast<std::size_t>(r - 1)]));
        det.add_term(w, neg_t_power(permutation_inversions(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

NCPolynomial quantum_minor_sum(const QuantumAlgebra& alg, int i) {
    const int n = alg.n();
    if (i < 1 || i > n)
        throw ContextMismatchError("quantum minor sum index out of range");
    NCPolynomial sum(n);
    // i-subsets of {1..n} in lexicographic order
    std::vector<int> I(static_cast<std::size_t>(i));
    std::iota(I.begin(), I.end(), 1);
    while (true) {
        std::vector<int> perm(static_cast<std::size_t>(i));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            NCWord w;
            for (int r = 0; r < i; ++r)
                w.push_back(alg.letter(I[static_cast<std::size_t>(r)],
                                       I[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]));
            sum.add_term(w, neg_t_power(permutation_inversions(perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        int pos = i - 1;
        while (pos >= 0 && I[static_cast<std::size_t>(pos)] == n - (i - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++I[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < i; ++q)
            I[static_cast<std::size_t>(q)] = I[static_cast<std::size_t>(q - 1)] + 1;
    }
    return sum;
}

Polynomial t1_image(const NCPolynomial& p) {
    VarContext ctx = VarContext::matrix(p.n());
    Polynomial out = Polynomial::zero(ctx);
    for (const auto& [w, c] : p.terms()) {
        ExponentVector m;
        for (int letter : w)
            m = m.times(ExponentVector::variable(letter));
        out.add_term(m, c.eval_at_one());
    }
    return out;
}

Polynomial semiclassical_limit_pair(const QuantumAlgebra& alg, const NCPolynomial& a,
                                    const NCPolynomial& b) {
    NCPolynomial comm = nc_commutator(alg, a, b);
    NCPolynomial quotient(comm.n());
    for (const auto& [w, c] : comm.terms()) {
        auto divided = c.divided_by_t_minus_one();
        if (!divided)
            throw std::logic_error("commutator coefficient not divisible by (t-1): "
                                   "quantum normalization bug");
        quotient.add_term(w, *divided);
    }
    return t1_image(quotient);
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string coeff = c.to_string();
        bool multi = c.terms().size() > 1;
        bool negative = !multi && coeff[0] == '-';
        if (negative)
            coeff = coeff.substr(1);
        if (first) {
            if (negative)
                out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string word_text;
        for (std::size_t q = 0; q < w.size(); ++q) {
            if (q)
                word_text += ".";
            auto [i, j] = std::pair{w[q] / n_ + 1, w[q] % n_ + 1};
            word_text += "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
        }
        if (w.empty()) {
            out << (multi ? "(" + coeff + ")" : coeff);
        } else if (multi) {
            out << "(" << coeff << ")*" << word_text;
        } else if (coeff == "1") {
            out << word_text;
        } else {
            out << coeff << "*" << word_text;
        }
    }
    return out.str();
}

NCPolynomial nc_parse(const std::string& text, int n) {
    detail::Scanner s(text);
    NCPolynomial total(n);
    bool negate = false;
    if (s.accept('-'))
        negate = true;
    else
        s.accept('+');
    auto scan_unsigned_rational = [&]() {
        std::size_t start = s.pos;
        while (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos])))
            ++s.pos;
        std::string num = s.text.substr(start, s.pos - start);
        if (s.accept('/')) {
            std::size_t dstart = s.pos;
            while (s.pos < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[s.pos])))
                ++s.pos;
            return rational_from_string(num + "/" + s.text.substr(dstart, s.pos - dstart));
        }
        return rational_from_string(num);
    };
    while (true) {
        LaurentScalar coeff(1);
        NCWord word;
        bool saw_word = false, saw_factor = false;
        while (true) {
            char c = s.peek();
            if (c == '(' && !saw_word) {
                ++s.pos;
                std::size_t depth_start = s.pos;
                int depth = 1;
                while (s.pos < s.text.size() && depth > 0) {
                    if (s.text[s.pos] == '(')
                        ++depth;
                    if (s.text[s.pos] == ')')
                        --depth;
                    ++s.pos;
                }
                if (depth != 0)
                    throw ParseError(depth_start, "unbalanced parenthesis");
                coeff = coeff * laurent_parse(s.text.substr(depth_start, s.pos - 1 - depth_start));
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c)) && !saw_word) {
                coeff = coeff * LaurentScalar(scan_unsigned_rational());
                saw_factor = true;
            } else if (c == 't' && !saw_word) {
                ++s.pos;
                long e = 1;
                if (s.accept('^'))
                    e = s.integer("t exponent");
                coeff = coeff.shifted(static_cast<int>(e));
                saw_factor = true;
            } else if (c == 'x') {
                // word := x[i,j] ('.' x[k,l])*
                saw_word = saw_factor = true;
                while (true) {
                    s.expect('x', "generator");
                    s.expect('[', "generator");
                    long i = s.integer("row index");
                    s.expect(',', "generator");
                    long j = s.integer("column index");
                    s.expect(']', "generator");
                    if (i < 1 || i > n || j < 1 || j > n)
                        throw ParseError(s.pos, "generator outside the algebra");
                    word.push_back(static_cast<int>(i - 1) * n + static_cast<int>(j - 1));
                    if (!s.accept('.'))
                        break;
                }
                break; // a word ends the term's factor list
            } else {
                throw ParseError(s.pos, "expected coefficient or generator word");
            }
            if (!s.accept('*'))
                break;
        }
        if (!saw_factor)
            throw ParseError(s.pos, "empty term");
        NCPolynomial term = NCPolynomial::word(n, word, coeff);
        total = negate ? total - term : total + term;
        if (s.done())
            return total;
        if (s.accept('+'))
            negate = false;
        else if (s.accept('-'))
            negate = true;
        else
            throw ParseError(s.pos, "expected '+', '-' or end of input");
    }
}

} // namespace poissonkit
