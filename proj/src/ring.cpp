#include "commat/ring.hpp"

#include <limits>
#include <stdexcept>

namespace commat {

Integer Integer::from_string(const std::string& s) {
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
    if (pos == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    // mpz_class rejects a leading '+'.
    return Integer(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
}

bool Integer::fits_int64() const {
    static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return v_ >= lo && v_ <= hi;
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
    return std::stoll(to_string());
}

Integer halve_exact(const Integer& x) {
    if (!x.is_even()) throw NotEvenlyDivisible("cannot halve odd integer " + x.to_string());
    mpz_class y;
    mpz_divexact_ui(y.get_mpz_t(), x.value().get_mpz_t(), 2);
    return Integer(std::move(y));
}

namespace {

void check_modulus(std::uint64_t modulus) {
    if (modulus < 2 || modulus > ModInt::max_modulus) {
        throw std::invalid_argument("modulus must lie in [2, 2^62], got " + std::to_string(modulus));
    }
}

void check_same(const ModInt& x, const ModInt& y) {
    if (x.modulus() != y.modulus()) {
        throw RingMismatch("mixing residues mod " + std::to_string(x.modulus()) + " and mod " +
                           std::to_string(y.modulus()));
    }
}

}  // namespace

ModInt::ModInt(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    check_modulus(modulus);
    const auto m = static_cast<__int128>(modulus);
    auto r = static_cast<__int128>(value) % m;
    if (r < 0) r += m;
    residue_ = static_cast<std::uint64_t>(r);
}

ModInt ModInt::from_integer(const Integer& value, std::uint64_t modulus) {
    check_modulus(modulus);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.value().get_mpz_t(), modulus);
    return ModInt(Reduced{}, r.get_ui(), modulus);
}

ModInt operator+(const ModInt& x, const ModInt& y) {
    check_same(x, y);
    std::uint64_t r = x.residue_ + y.residue_;
    if (r >= x.modulus_) r -= x.modulus_;
    return ModInt(ModInt::Reduced{}, r, x.modulus_);
}

ModInt operator-(const ModInt& x, const ModInt& y) {
    check_same(x, y);
    const std::uint64_t r = x.residue_ >= y.residue_ ? x.residue_ - y.residue_ : x.residue_ + x.modulus_ - y.residue_;
    return ModInt(ModInt::Reduced{}, r, x.modulus_);
}

ModInt operator*(const ModInt& x, const ModInt& y) {
    check_same(x, y);
    const auto p = static_cast<unsigned __int128>(x.residue_) * y.residue_;
    return ModInt(ModInt::Reduced{}, static_cast<std::uint64_t>(p % x.modulus_), x.modulus_);
}

ModInt ModInt::operator-() const {
    return ModInt(Reduced{}, residue_ == 0 ? 0 : modulus_ - residue_, modulus_);
}

ModInt halve_exact(const ModInt& x) {
    if (!can_halve(x)) {
        throw ExactHalveUnavailable("2 is not invertible modulo " + std::to_string(x.modulus()));
    }
    // For odd m, x/2 = x/2 when x is even and (x + m)/2 otherwise.
    const std::uint64_t r = x.residue_ % 2 == 0 ? x.residue_ / 2 : x.residue_ / 2 + x.modulus_ / 2 + 1;
    return ModInt(ModInt::Reduced{}, r, x.modulus_);
}

ModularRing::ModularRing(std::uint64_t modulus) : modulus_(modulus) { check_modulus(modulus); }

}  // namespace commat
