#pragma once

#include <stdexcept>
#include <string>

namespace mwidth {

// Every failure raised by the library derives from mwidth::error, so callers
// (the CLI in particular) can map the concrete type onto an exit code.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MWIDTH_DEFINE_ERROR(Name)             \
  class Name : public error {                 \
   public:                                    \
    using error::error;                       \
  }

MWIDTH_DEFINE_ERROR(NotATree);
MWIDTH_DEFINE_ERROR(NotASubtree);
MWIDTH_DEFINE_ERROR(VertexOutOfRange);
MWIDTH_DEFINE_ERROR(InvalidInterval);
MWIDTH_DEFINE_ERROR(InvalidRelation);
MWIDTH_DEFINE_ERROR(InvalidInstance);
MWIDTH_DEFINE_ERROR(Uncoverable);
MWIDTH_DEFINE_ERROR(SizeCapExceeded);
MWIDTH_DEFINE_ERROR(EmptyFamily);
MWIDTH_DEFINE_ERROR(EndpointsNotDistinct);
MWIDTH_DEFINE_ERROR(NotAPartialOrder);
MWIDTH_DEFINE_ERROR(PosetMismatch);
// Raised only if a mathematical guarantee the algorithms rely on is observed
// to fail. Any occurrence is either a bug or a counterexample.
MWIDTH_DEFINE_ERROR(LemmaViolation);
MWIDTH_DEFINE_ERROR(ParseError);

#undef MWIDTH_DEFINE_ERROR

}  // namespace mwidth
