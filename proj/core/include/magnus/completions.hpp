#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "magnus/group.hpp"

namespace magnus {

/// U(nu, p^m): series whose coefficients of degree 1..nu lie in p^m Z_p.
struct OpenSubgroupSpec {
  int nu;
  unsigned long p;
  int m;

  OpenSubgroupSpec(int nu, unsigned long p, int m);
  Integer modulus() const { return prime_power(p, static_cast<unsigned long>(m)); }
};

/// Number of Lyndon words of length <= nu over n letters.
std::size_t sigma(int n, int nu);

/// Precision cap that leaves room for the divisions by m! inside the
/// binomial series: m + ceil(log_p N!).
int recommended_cap(const OpenSubgroupSpec& spec, int max_degree);

/// Coefficientwise membership. Integer and rational series are embedded
/// exactly; p-adic series need precision >= m and the matching prime.
bool in_open_subgroup(const Series& g, const OpenSubgroupSpec& spec);

/// t_L mod p^m for |L| <= nu (graded order), zeros included.
std::map<Word, Integer, GradedLess> coset_coordinates(const Series& g, const OpenSubgroupSpec& spec);

/// Smallest p^e with g^{p^e} in U. Throws InternalInconsistency past
/// e = m * (number of words of length 1..nu).
Integer order_mod_subgroup(const Series& g, const OpenSubgroupSpec& spec);

struct PowerAgreement {
  Integer k;
  /// Largest j with Xi_L^k = Xi_L^t mod p^j in every coefficient; nullopt
  /// when k and t are the same element and the two powers coincide.
  std::optional<long> precision;
};

/// Agreement of Xi_L^{k_i} with Xi_L^t for each approximation k_i of t.
/// Requires k_i = t mod p^i (1-based i). ctx must be p-adic.
std::vector<PowerAgreement> integer_power_limit(const Word& L, const Coefficient& t,
                                                const std::vector<Integer>& ks, const SeriesContext& ctx);

/// Distinct coset-coordinate tuples reached from 1 by right multiplication
/// with the generators and their inverses.
std::vector<std::map<Word, Integer, GradedLess>> enumerate_coordinate_classes(int n, const OpenSubgroupSpec& spec);

/// Order of the image of the free group in the quotient by U(nu, p^m),
/// found by closure over coefficient tuples mod p^m.
std::size_t quotient_order(int n, const OpenSubgroupSpec& spec);

}  // namespace magnus
