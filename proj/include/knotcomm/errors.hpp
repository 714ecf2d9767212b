#ifndef KNOTCOMM_ERRORS_HPP
#define KNOTCOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotcomm {

/* Base class for all errors raised by this library.  Everything thrown on
   purpose derives from Error; anything else escaping is a bug. */
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* An operation that needs a nonzero polynomial received the zero polynomial. */
class ZeroPolynomial : public Error {
public:
  explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

/* Input to reciprocal_decompose is not a reciprocal polynomial of even
   degree. */
class NotReciprocal : public Error {
public:
  explicit NotReciprocal(const std::string& msg) : Error(msg) {}
};

/* A certified computation could not reach the requested radius within the
   working-precision cap. */
class PrecisionExhausted : public Error {
public:
  explicit PrecisionExhausted(const std::string& msg) : Error(msg) {}
};

/* A matrix offered as a Seifert matrix fails det(A - A^t) = 1. */
class InvalidSeifert : public Error {
public:
  explicit InvalidSeifert(const std::string& msg) : Error(msg) {}
};

/* Signature requested at a point of the unit circle where the Alexander
   polynomial vanishes; the form is degenerate there. */
class SingularAtRootOfUnity : public Error {
public:
  explicit SingularAtRootOfUnity(const std::string& msg) : Error(msg) {}
};

/* Signature requested at a specific circle point z where the evaluated form
   is singular because the Alexander polynomial vanishes at z. */
class SingularAtZ : public Error {
public:
  explicit SingularAtZ(const std::string& msg) : Error(msg) {}
};

/* A knot record does not carry enough data for the requested invariant
   (e.g. a signature profile that cannot be reconstructed). */
class InsufficientData : public Error {
public:
  explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

/* Growth/limit statements require an Alexander polynomial with no root at
   any root of unity; this knot has one. */
class NotAdmissible : public Error {
public:
  explicit NotAdmissible(const std::string& msg) : Error(msg) {}
};

/* A cyclic cover that the comparison relies on has first Betti number
   different from 1, so the quantities being compared are undefined. */
class B1Violation : public Error {
public:
  explicit B1Violation(const std::string& msg) : Error(msg) {}
};

/* Catalog file is malformed or a record fails validation. */
class CatalogError : public Error {
public:
  explicit CatalogError(const std::string& msg) : Error(msg) {}
};

/* A knot name was not found in the active catalog. */
class UnknownKnot : public Error {
public:
  explicit UnknownKnot(const std::string& msg) : Error(msg) {}
};

}  // namespace knotcomm

#endif
