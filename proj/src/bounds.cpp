#include "tverwind/bounds.hpp"

#include "tverwind/errors.hpp"

namespace tverwind {

namespace {

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& b, unsigned long e) {
    Rational r(ipow(b.get_num(), e), ipow(b.get_den(), e));
    r.canonicalize();
    return r;
}

std::pair<int, int> require_prime_power(int q) {
    auto pp = prime_power(q);
    if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    return *pp;
}

Integer ceil_of(const Rational& x) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

}  // namespace

Integer sierksma_bound(int d, int q) {
    if (d < 1 || q < 2) throw InvalidArgument("sierksma_bound needs d >= 1 and q >= 2");
    return ipow(factorial(q - 1), static_cast<unsigned long>(d));
}

std::optional<std::pair<int, int>> prime_power(int q) {
    if (q < 2) return std::nullopt;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int r = 0;
    for (int m = q; m > 1; m /= p) {
        if (m % p != 0) return std::nullopt;
        ++r;
    }
    return std::pair{p, r};
}

Rational hell_bound(int d, int q) {
    if (d < 1) throw InvalidArgument("hell_bound needs d >= 1");
    const auto [p, r] = require_prime_power(q);
    const unsigned long e = static_cast<unsigned long>(((d + 1) * (q - 1) + 1) / 2);
    return rpow(frac(q, r + 1), e) / Rational(factorial(q - 1));
}

Rational d2_winding_bound(int q) {
    const auto [p, r] = require_prime_power(q);
    const Integer f = factorial(q - 1);
    return rpow(frac(q, r + 1), static_cast<unsigned long>(2 * (q - 1))) / Rational(f * f);
}

bool BoundReport::flagged() const {
    return observed && hell_bound && Integer(static_cast<long>(*observed)) < ceil_of(*hell_bound);
}

BoundReport bound_report(int d, int q, std::optional<long long> observed) {
    BoundReport r;
    r.d = d;
    r.q = q;
    r.sierksma = sierksma_bound(d, q);
    r.prime_power = prime_power(q);
    if (r.prime_power) {
        r.hell_bound = hell_bound(d, q);
        if (d == 2) r.d2_winding_bound = d2_winding_bound(q);
    }
    r.observed = observed;
    return r;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
    nlohmann::json j{{"d", r.d}, {"q", r.q}, {"sierksma", r.sierksma.get_str()}};
    j["prime_power"] = r.prime_power ? nlohmann::json{{"p", r.prime_power->first}, {"r", r.prime_power->second}}
                                     : nlohmann::json(nullptr);
    j["hell_bound"] = r.hell_bound ? nlohmann::json(to_string(*r.hell_bound)) : nlohmann::json(nullptr);
    j["d2_winding_bound"] =
        r.d2_winding_bound ? nlohmann::json(to_string(*r.d2_winding_bound)) : nlohmann::json(nullptr);
    j["observed"] = r.observed ? nlohmann::json(*r.observed) : nlohmann::json(nullptr);
    j["flagged"] = r.flagged();
    return j;
}

}  // namespace tverwind
