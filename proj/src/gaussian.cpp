#include "lindlehmer/gaussian.hpp"

namespace lindlehmer {

std::string GaussianInteger::to_string() const {
  if (sgn(im) == 0) return lindlehmer::to_string(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = lindlehmer::to_string(im) + "i";
  }
  if (sgn(re) == 0) return imag;
  return lindlehmer::to_string(re) + (sgn(im) > 0 ? "+" : "") + imag;
}

}  // namespace lindlehmer
