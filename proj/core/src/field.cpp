#include "gdrs/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gdrs/errors.hpp"

namespace gdrs {

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

constexpr std::uint32_t kAddTableMaxOrder = 256;

}  // namespace

std::optional<PrimePower> prime_power(std::uint32_t q) {
    if (q < 2) return std::nullopt;
    std::uint32_t p = q;
    for (std::uint32_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            break;
        }
    }
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, m};
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t q) {
    // Conway polynomials, low-to-high coefficients.
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> kTable = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {9, {2, 2, 1}},
        {27, {1, 2, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
        {243, {1, 2, 0, 0, 0, 1}},
        {25, {2, 4, 1}},
        {125, {3, 3, 0, 1}},
        {49, {3, 6, 1}},
        {121, {2, 7, 1}},
        {169, {2, 12, 1}},
    };
    auto it = kTable.find(q);
    if (it == kTable.end()) return std::nullopt;
    return it->second;
}

Field Field::make(std::uint32_t q, std::uint32_t max_order) {
    auto pp = prime_power(q);
    if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (pp->m == 1) return make(q, {}, max_order);
    auto mod = builtin_modulus(q);
    if (!mod) {
        throw Error(Errc::NoModulusAvailable,
                    "no built-in modulus for q=" + std::to_string(q) + "; supply one");
    }
    return make(q, std::move(*mod), max_order);
}

Field Field::make(std::uint32_t q, std::vector<std::uint32_t> modulus, std::uint32_t max_order) {
    auto pp = prime_power(q);
    if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > max_order) {
        throw Error(Errc::InvalidArgument,
                    "q=" + std::to_string(q) + " exceeds bound " + std::to_string(max_order));
    }
    Field f;
    f.q_ = q;
    f.p_ = pp->p;
    f.m_ = pp->m;
    if (f.m_ == 1) {
        modulus.clear();
    } else {
        if (modulus.empty()) {
            throw Error(Errc::NoModulusAvailable, "extension field needs a modulus");
        }
        if (modulus.size() != f.m_ + 1 || modulus.back() != 1 ||
            std::any_of(modulus.begin(), modulus.end(),
                        [&](std::uint32_t c) { return c >= f.p_; })) {
            throw Error(Errc::InvalidModulus, "modulus must be monic of degree m over F_p");
        }
    }
    f.modulus_ = std::move(modulus);

    if (q <= kAddTableMaxOrder) {
        f.add_table_.resize(static_cast<std::size_t>(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                f.add_table_[a * q + b] = static_cast<std::uint16_t>(f.add_slow({a}, {b}).value);
            }
        }
    }

    // Smallest element of full multiplicative order. If the modulus is
    // reducible the unit group is smaller than q-1 and nothing qualifies.
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t g = 1; g < q; ++g) {
        if (f.has_full_order({g}, factors)) {
            f.build_tables({g});
            return f;
        }
    }
    throw Error(Errc::InvalidModulus, "no primitive element; modulus is not irreducible");
}

Field Field::with_primitive(FieldElement beta) const {
    if (beta.value == 0 || beta.value >= q_ || !has_full_order(beta, prime_factors(q_ - 1))) {
        throw Error(Errc::InvalidArgument, to_string(beta) + " is not primitive");
    }
    Field f = *this;
    f.build_tables(beta);
    return f;
}

bool Field::has_full_order(FieldElement g, const std::vector<std::uint32_t>& factors) const noexcept {
    if (q_ == 2) return g.value == 1;
    if (pow_reference(g, q_ - 1).value != 1) return false;
    for (auto r : factors) {
        if (pow_reference(g, (q_ - 1) / r).value == 1) return false;
    }
    return true;
}

void Field::build_tables(FieldElement beta) {
    beta_ = beta;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    FieldElement cur = one();
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
        exp_[k] = cur.value;
        log_[cur.value] = k;
        cur = mul_reference(cur, beta);
    }
}

FieldElement Field::element(std::uint32_t value) const {
    if (value >= q_) {
        throw Error(Errc::InvalidArgument,
                    std::to_string(value) + " is not an element of F_" + std::to_string(q_));
    }
    return {value};
}

std::vector<FieldElement> Field::nonzero_elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_ - 1);
    for (std::uint32_t v = 1; v < q_; ++v) out.push_back({v});
    return out;
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
    std::vector<std::uint32_t> c(m_, 0);
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < m_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElement Field::add_slow(FieldElement a, FieldElement b) const noexcept {
    if (m_ == 1) return {(a.value + b.value) % p_};
    if (p_ == 2) return {a.value ^ b.value};
    std::uint32_t x = a.value;
    std::uint32_t y = b.value;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const noexcept {
    if (m_ == 1) return {(p_ - a.value) % p_};
    if (p_ == 2) return a;
    std::uint32_t x = a.value;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return {out};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
    const std::uint32_t l = log_[a.value];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const noexcept {
    if (a.value == 0) return e == 0 ? one() : zero();
    const std::uint64_t k = (static_cast<std::uint64_t>(log_[a.value]) * (e % (q_ - 1))) % (q_ - 1);
    return {exp_[k]};
}

FieldElement Field::mul_reference(FieldElement a, FieldElement b) const noexcept {
    if (m_ == 1) {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
    }
    // Reduce by the monic modulus from the top degree down.
    for (std::uint32_t k = 2 * m_ - 2; k >= m_; --k) {
        const std::uint32_t c = prod[k];
        if (c != 0) {
            for (std::uint32_t i = 0; i <= m_; ++i) {
                auto& slot = prod[k - m_ + i];
                slot = (slot + (p_ - c) * modulus_[i]) % p_;
            }
        }
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + prod[i];
    return {out};
}

FieldElement Field::pow_reference(FieldElement a, std::uint64_t e) const noexcept {
    FieldElement r = one();
    while (e != 0) {
        if (e & 1U) r = mul_reference(r, a);
        a = mul_reference(a, a);
        e >>= 1U;
    }
    return r;
}

std::uint32_t Field::dlog(FieldElement a) const {
    if (a.value == 0) throw Error(Errc::LogOfZero, "discrete log of zero");
    if (a.value >= q_) throw Error(Errc::InvalidArgument, "element out of range");
    return log_[a.value];
}

std::string Field::to_string(FieldElement a) const {
    if (m_ == 1) return std::to_string(a.value);
    // Coefficient vector, highest degree first, e.g. "[1,0,2]".
    const auto c = coefficients(a);
    std::ostringstream os;
    os << '[';
    for (std::uint32_t i = m_; i-- > 0;) {
        os << c[i];
        if (i != 0) os << ',';
    }
    os << ']';
    return os.str();
}

namespace {

void check_mu(const Field& field, std::uint32_t mu) {
    if (mu < 1 || mu + 1 >= field.order()) {
        throw Error(Errc::MuOutOfRange, "need 1 <= mu < q-1, got mu=" + std::to_string(mu) +
                                            " for q=" + std::to_string(field.order()));
    }
}

}  // namespace

std::vector<BigInt> product_peculiarity_table(const Field& field, std::uint32_t mu) {
    check_mu(field, mu);
    const std::uint32_t q = field.order();
    std::vector<std::uint64_t> counts(q, 0);
    // Iterative DFS over combinations of {1..q-1} with a running product.
    std::vector<std::uint32_t> pick(mu, 0);
    std::vector<FieldElement> partial(mu + 1, field.one());
    std::uint32_t depth = 0;
    pick[0] = 1;
    while (true) {
        const std::uint32_t remaining = mu - depth - 1;
        if (pick[depth] + remaining > q - 1) {
            if (depth == 0) break;
            --depth;
            ++pick[depth];
            continue;
        }
        partial[depth + 1] = field.mul_reference(partial[depth], {pick[depth]});
        if (depth + 1 == mu) {
            ++counts[partial[mu].value];
            ++pick[depth];
        } else {
            pick[depth + 1] = pick[depth] + 1;
            ++depth;
        }
    }
    std::vector<BigInt> out(q);
    for (std::uint32_t v = 0; v < q; ++v) out[v] = counts[v];
    return out;
}

BigInt product_peculiarity_bruteforce(const Field& field, std::uint32_t mu, FieldElement gamma) {
    check_mu(field, mu);
    if (gamma.value == 0) throw Error(Errc::LogOfZero, "gamma must be nonzero");
    return product_peculiarity_table(field, mu)[field.element(gamma.value).value];
}

}  // namespace gdrs
