#pragma once

namespace conedet::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double log_two = 0.693147180559945309417232121458176568;
inline constexpr double log_pi = 1.144729885849400174143427351353058712;
inline constexpr double log_two_pi = 1.837877066409345483560659472811235279;
inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

// zeta_R'(-1) = 1/12 - log A, A the Glaisher-Kinkelin constant.
inline constexpr double riemann_zeta_prime_minus1 = -0.165421143700450929213919660242780643;

}  // namespace conedet::constants
