// Builds S_2..S_6 for one parameter set and applies the annihilation operator.

#include <iostream>
#include <memory>

#include "qsob/qsob.hpp"

int main() {
  using qsob::Rational;
  auto fam = std::make_shared<qsob::HermiteFamily<Rational>>(qsob::ExactContext::exact(Rational(1, 2)));
  const auto params = qsob::SobolevParams<Rational>::make(Rational(2), Rational(1), qsob::MassConvention::kEffective);
  const qsob::SobolevFamily<Rational> sfam(fam, params);

  for (long n = 2; n <= 6; ++n) {
    const auto op = qsob::AnnihilationOperator<Rational>::from(sfam, n);
    std::cout << "S_" << n << " = " << sfam.s_poly(n).to_string() << "\n";
    std::cout << "  a_" << n << " S_" << n << " = " << qsob::annihilate(op, sfam).to_string() << "\n";
  }
}
