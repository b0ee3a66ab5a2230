#ifndef ADIASHORT_ERRORS_HPP
#define ADIASHORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adiashort {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// relaxation
struct DegenerateSpectrum : Error { using Error::Error; };
struct InvalidSpectrum : Error { using Error::Error; };
struct KinkAtZero : Error { using Error::Error; };

// series
struct TruncationOverflow : Error { using Error::Error; };
struct NotExpandable : Error { using Error::Error; };

// protocol
struct NonpositiveTau : Error { using Error::Error; };
struct InvalidProtocol : Error { using Error::Error; };

// work
struct UnsupportedSpectrum : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };
struct UnresolvedComb : Error { using Error::Error; };

// shortcut
struct SingularSystem : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };

} // namespace adiashort

#endif
