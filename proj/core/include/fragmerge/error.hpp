#pragma once

#include <stdexcept>
#include <string>

namespace fragmerge {

enum class Errc {
  UniverseTooLarge,
  BadUniverse,
  IncompatibleUniverse,
  Syntax,
  FragmentViolation,
  UnknownAtom,
  InconsistentKb,
  LengthMismatch,
  NotClosed,
  NotEquidistant,
  WrongModelCount,
  PairwiseIncomparableUnsupported,
  Not1CnfProfile,
  BoundsTooLarge,
  Io,
  Usage,
};

/// Domain error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace fragmerge
