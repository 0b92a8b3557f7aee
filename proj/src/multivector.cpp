#include "vweyl/multivector.hpp"

#include <sstream>

namespace clifford {

bool blade_lex_less(BladeMask a, BladeMask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> blade_indices(BladeMask m) {
    std::vector<int> idx;
    while (m != 0) {
        idx.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return idx;
}

std::string blade_key(BladeMask m) {
    std::ostringstream os;
    bool first = true;
    for (int i : blade_indices(m)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    return os.str();
}

BladeMask blade_from_key(const std::string& key, std::size_t dim) {
    if (key.empty()) return 0;
    BladeMask m = 0;
    std::size_t pos = 0;
    long prev = -1;
    while (pos <= key.size()) {
        std::size_t comma = key.find(',', pos);
        std::string tok = key.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
        if (tok.empty()) throw std::invalid_argument("blade key: empty index");
        for (char ch : tok)
            if (ch < '0' || ch > '9') throw std::invalid_argument("blade key: bad index '" + tok + "'");
        long i = std::stol(tok);
        if (i <= prev) throw std::invalid_argument("blade key: indices must strictly increase");
        if (i >= static_cast<long>(dim)) throw std::invalid_argument("blade key: index out of range");
        m |= BladeMask(1) << i;
        prev = i;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return m;
}

AlgebraPtr Algebra::create(SpacePtr space) {
    if (space->dim() > 64)
        throw std::invalid_argument("Algebra: more than 64 generators");
    return AlgebraPtr(new Algebra(std::move(space)));
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    return &a == &b || a.space().same_as(b.space());
}

namespace {

void accumulate(TermMap& into, BladeMask m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = into.find(m);
    if (it == into.end()) {
        into.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

}  // namespace

TermMap Algebra::mul_blade_gen(BladeMask lhs, unsigned j) const {
    TermMap out;
    const BladeMask jbit = BladeMask(1) << j;
    if (lhs < jbit) {  // every index of lhs is below j: already normal-ordered
        out.emplace(lhs | jbit, Rational(1));
        return out;
    }
    const unsigned top = 63u - static_cast<unsigned>(std::countl_zero(lhs));
    const BladeMask rest = lhs & ~(BladeMask(1) << top);
    const auto& g = space_->gram();
    if (top == j) {
        // g_j g_j = -q(g_j)
        accumulate(out, rest, -g(j, j));
        return out;
    }
    // top > j: e_lhs g_j = -(e_rest g_j) g_top - 2 S(g_top, g_j) e_rest
    TermMap inner = mul_blade_gen(rest, j);
    for (const auto& [m, c] : inner) accumulate(out, m | (BladeMask(1) << top), -c);
    Rational cross = Rational(-2) * g(top, j);
    accumulate(out, rest, cross);
    return out;
}

TermMap Algebra::blade_product(BladeMask lhs, BladeMask rhs) const {
    const bool memoable = dim() <= 32;
    const std::uint64_t key = (static_cast<std::uint64_t>(lhs) << 32) | rhs;
    if (memoable) {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    TermMap acc;
    acc.emplace(lhs, Rational(1));
    for (int j : blade_indices(rhs)) {
        TermMap next;
        for (const auto& [m, c] : acc) {
            TermMap part = mul_blade_gen(m, static_cast<unsigned>(j));
            for (const auto& [pm, pc] : part) accumulate(next, pm, c * pc);
        }
        acc = std::move(next);
    }
    if (memoable) {
        std::lock_guard<std::mutex> lock(memo_mu_);
        memo_.emplace(key, acc);
    }
    return acc;
}

TermMap Algebra::blade_reversion(BladeMask m) const {
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = rev_memo_.find(m);
        if (it != rev_memo_.end()) return it->second;
    }
    TermMap acc;
    acc.emplace(0, Rational(1));
    std::vector<int> idx = blade_indices(m);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        TermMap next;
        for (const auto& [bm, c] : acc) {
            TermMap part = mul_blade_gen(bm, static_cast<unsigned>(*it));
            for (const auto& [pm, pc] : part) accumulate(next, pm, c * pc);
        }
        acc = std::move(next);
    }
    std::lock_guard<std::mutex> lock(memo_mu_);
    rev_memo_.emplace(m, acc);
    return acc;
}

Multivector Multivector::zero(AlgebraPtr alg) { return Multivector(std::move(alg), {}); }

Multivector Multivector::scalar(AlgebraPtr alg, const Rational& c) {
    TermMap t;
    if (!c.is_zero()) t.emplace(0, c);
    return Multivector(std::move(alg), std::move(t));
}

Multivector Multivector::basis_blade(AlgebraPtr alg, BladeMask m) {
    if (alg->dim() < 64 && m >= (BladeMask(1) << alg->dim()))
        throw std::invalid_argument("Multivector: blade index out of range");
    TermMap t;
    t.emplace(m, Rational(1));
    return Multivector(std::move(alg), std::move(t));
}

Multivector Multivector::embed(AlgebraPtr alg, const QVector& v) {
    if (v.size() != alg->dim())
        throw std::invalid_argument("Multivector::embed: dimension mismatch");
    TermMap t;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) t.emplace(BladeMask(1) << i, v[i]);
    return Multivector(std::move(alg), std::move(t));
}

Multivector Multivector::from_terms(AlgebraPtr alg, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (alg->dim() < 64 && it->first >= (BladeMask(1) << alg->dim()))
            throw std::invalid_argument("Multivector: blade index out of range");
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    return Multivector(std::move(alg), std::move(terms));
}

bool Multivector::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool Multivector::is_vector() const {
    for (const auto& [m, c] : terms_)
        if (grade(m) != 1) return false;
    return true;
}

Rational Multivector::scalar_part() const { return coeff(0); }

QVector Multivector::vector_part() const {
    QVector v(alg_->dim());
    for (const auto& [m, c] : terms_)
        if (grade(m) == 1) v[std::countr_zero(m)] = c;
    return v;
}

Rational Multivector::coeff(BladeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Multivector::max_grade() const {
    int g = 0;
    for (const auto& [m, c] : terms_) g = std::max(g, grade(m));
    return g;
}

Multivector Multivector::grade_part(int k) const {
    TermMap t;
    for (const auto& [m, c] : terms_)
        if (grade(m) == k) t.emplace(m, c);
    return Multivector(alg_, std::move(t));
}

Multivector Multivector::parity_part(int parity) const {
    TermMap t;
    for (const auto& [m, c] : terms_)
        if (grade(m) % 2 == parity) t.emplace(m, c);
    return Multivector(alg_, std::move(t));
}

bool Multivector::is_even() const {
    for (const auto& [m, c] : terms_)
        if (grade(m) % 2 != 0) return false;
    return true;
}

bool Multivector::is_odd() const {
    for (const auto& [m, c] : terms_)
        if (grade(m) % 2 != 1) return false;
    return true;
}

Multivector Multivector::signed_by_grade(int (*sign_exp)(int)) const {
    TermMap t;
    for (const auto& [m, c] : terms_) {
        if (sign_exp(grade(m)) % 2 == 0)
            t.emplace(m, c);
        else
            t.emplace(m, -c);
    }
    return Multivector(alg_, std::move(t));
}

Multivector Multivector::grade_involution() const {
    return signed_by_grade([](int k) { return k; });
}

Multivector Multivector::reversion() const {
    TermMap out;
    for (const auto& [m, c] : terms_) {
        TermMap rev = alg_->blade_reversion(m);
        for (const auto& [rm, rc] : rev) accumulate(out, rm, c * rc);
    }
    return Multivector(alg_, std::move(out));
}

Multivector Multivector::conjugation() const {
    return reversion().grade_involution();
}

Multivector Multivector::operator-() const {
    TermMap t;
    for (const auto& [m, c] : terms_) t.emplace(m, -c);
    return Multivector(alg_, std::move(t));
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (!alg_) {
        *this = o;
        return *this;
    }
    if (!same_algebra(*alg_, *o.alg_))
        throw std::invalid_argument("Multivector: space mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (!alg_) {
        *this = -o;
        return *this;
    }
    if (!same_algebra(*alg_, *o.alg_))
        throw std::invalid_argument("Multivector: space mismatch");
    for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
    return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    if (!same_algebra(*a.alg_, *b.alg_))
        throw std::invalid_argument("Multivector: space mismatch");
    TermMap out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            TermMap prod = a.alg_->blade_product(ma, mb);
            Rational c = ca * cb;
            for (const auto& [m, pc] : prod) accumulate(out, m, c * pc);
        }
    return Multivector(a.alg_, std::move(out));
}

Multivector operator*(const Rational& c, const Multivector& x) {
    TermMap out;
    if (!c.is_zero())
        for (const auto& [m, xc] : x.terms_) out.emplace(m, c * xc);
    return Multivector(x.alg_, std::move(out));
}

bool operator==(const Multivector& a, const Multivector& b) {
    return same_algebra(*a.alg_, *b.alg_) && a.terms_ == b.terms_;
}

std::string Multivector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        if (m != 0) os << "*e{" << blade_key(m) << "}";
        first = false;
    }
    return os.str();
}

}  // namespace clifford
