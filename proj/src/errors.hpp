#ifndef SZETA_ERRORS_HPP
#define SZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace szeta {

enum class ErrorCode {
  Usage,       // malformed argument (k < 2, bad enum, ...)
  Domain,      // numeric precondition violated (a <= 0, Re s too small, ...)
  PoleAtOne,   // Hurwitz zeta requested at s = 1
  AtPole,      // evaluation point sits on a true pole of the zeta function
  Unsupported, // no closed form exists for the request
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace szeta

#endif
