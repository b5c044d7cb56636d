#pragma once

#include <stdexcept>
#include <string>

namespace homcrypt {

// Base for all domain errors; the CLI maps subclasses onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files / unparsable text.
struct ParseError : Error {
    using Error::Error;
};

// Structural checks failed: group laws, presentation consistency, key mismatches.
struct VerificationError : Error {
    using Error::Error;
};

// Inputs outside the constructions' hypotheses (trivial groups, Z2-sum rings, ...).
struct EligibilityError : Error {
    using Error::Error;
};

// Representation solvers rejected the input.
struct SolverError : Error {
    using Error::Error;
};

struct NotUnimodular : VerificationError {
    NotUnimodular() : VerificationError("matrix determinant is not +-1") {}
};

struct EmptySet : VerificationError {
    EmptySet() : VerificationError("bit size of an empty set is undefined") {}
};

struct BoundaryPoint : SolverError {
    BoundaryPoint() : SolverError("orbit point lies on the unit circle") {}
};

struct NotInFreeGroup : SolverError {
    explicit NotInFreeGroup(const std::string& why)
        : SolverError("matrix is not in the free group <A,B>: " + why) {}
};

struct NotInGroup : SolverError {
    explicit NotInGroup(const std::string& why)
        : SolverError("matrix is not in the generated subgroup: " + why) {}
};

struct UnknownGenerator : VerificationError {
    explicit UnknownGenerator(const std::string& name)
        : VerificationError("unknown generator: " + name) {}
};

struct NotAbelian : VerificationError {
    NotAbelian() : VerificationError("group is not abelian") {}
};

struct NotNonidentity : EligibilityError {
    NotNonidentity() : EligibilityError("construction requires a nonidentity group") {}
};

struct TooFewGenerators : EligibilityError {
    TooFewGenerators() : EligibilityError("presentation needs at least two generators") {}
};

struct IdentityGroup : EligibilityError {
    IdentityGroup() : EligibilityError("plaintext group must be nonidentity") {}
};

struct PresentationMismatch : VerificationError {
    explicit PresentationMismatch(const std::string& why)
        : VerificationError("presentation does not match the concrete group: " + why) {}
};

struct IneligibleRing : EligibilityError {
    IneligibleRing() : EligibilityError("ring has a trivial unit group (direct sum of Z2 copies)") {}
};

struct UnmappedBasisLetter : VerificationError {
    explicit UnmappedBasisLetter(const std::string& s)
        : VerificationError("basis letter has no generator assigned: s = " + s) {}
};

struct NoTransversalMatch : SolverError {
    NoTransversalMatch() : SolverError("no transversal element matches the query modulo ker(f)") {}
};

} // namespace homcrypt
