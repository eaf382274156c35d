// errors.hpp: exception types raised by the library
#pragma once

#include <stdexcept>
#include <string>

namespace dqo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
  // Throws a copy of the same dynamic type carrying a new message.
  [[noreturn]] virtual void rethrow(const std::string& msg) const { throw Error(msg); }
};

#define DQO_ERROR(Name)                                                      \
  struct Name : Error {                                                      \
    using Error::Error;                                                      \
    const char* kind() const noexcept override { return #Name; }             \
    [[noreturn]] void rethrow(const std::string& msg) const override {       \
      throw Name(msg);                                                       \
    }                                                                        \
  }

DQO_ERROR(InvalidParams);
DQO_ERROR(OverdampedMode);
DQO_ERROR(CausticTime);
DQO_ERROR(DegenerateRatios);
DQO_ERROR(QuadratureNonConvergence);
DQO_ERROR(SingularAssembly);
DQO_ERROR(NonNormalizable);
DQO_ERROR(NoConvergence);
DQO_ERROR(Unstable);

#undef DQO_ERROR

}  // namespace dqo
