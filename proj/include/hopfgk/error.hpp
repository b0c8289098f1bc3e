#pragma once

#include <stdexcept>
#include <string>

namespace hopfgk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different symbol tables.
class PresentationMismatch : public Error {
public:
    PresentationMismatch() : Error("elements belong to different presentations") {}
};

/// Structurally invalid presentation (bad relation, runaway reduction, ...).
class MalformedPresentation : public Error {
public:
    using Error::Error;
};

class NonConfluentError : public Error {
public:
    using Error::Error;
};

class InvalidSubalgebra : public Error {
public:
    using Error::Error;
};

/// Enumeration or reduction exceeded its configured size cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class CriterionInapplicable : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace hopfgk
