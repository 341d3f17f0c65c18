#ifndef RINGKIT_ALGEBRA_HPP
#define RINGKIT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <ringkit/ring.hpp>

namespace ringkit
{

// Largest ring that enumerate/classify will walk.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

// Binary exponentiation; pow(a, 0) = 1.
Element pow(const Element &a, std::uint64_t n);
Element pow(const Element &a, const Integer &n);

// n*a: repeated addition, (-n)*a = -(n*a).
Element int_scale(const Integer &n, const Element &a);

// Least m > 0 with m*1 = 0, else 0.
Integer characteristic(const Ring &r);

// a -> a^p in a commutative ring of prime characteristic p. Throws
// NotPrimeCharacteristic.
Element frobenius(const Element &a);

// nullopt for infinite rings.
std::optional<Integer> cardinality(const Ring &r);

// All elements exactly once in a deterministic order. Throws InfiniteRing,
// TooLarge.
std::vector<Element> enumerate(const Ring &r);

bool is_nilpotent(const Element &a);
bool is_idempotent(const Element &a);

struct Classification {
    std::vector<Element> units;
    std::vector<Element> zero_divisors;
    std::vector<Element> nilpotents;
    std::vector<Element> idempotents;
};

std::vector<Element> units(const Ring &r);
std::vector<Element> zero_divisors(const Ring &r);
std::vector<Element> nilpotents(const Ring &r);
std::vector<Element> idempotents(const Ring &r);
Classification classify(const Ring &r);

// Direct product with componentwise operations; same as Ring::product.
Ring product_ring(std::vector<Ring> rings);

} // namespace ringkit

#endif
