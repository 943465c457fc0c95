#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vbs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algebraic axiom failed. `axiom` names the failing condition and
/// `witness` holds the (0-based) elements of the first failing instance in
/// lexicographic order.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<int> witness);

    const std::string& axiom() const noexcept { return axiom_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A constructor precondition (parameter constraint) does not hold.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

class MalformedCode : public Error {
public:
    using Error::Error;
};

class EdgeMultiplicity : public Error {
public:
    explicit EdgeMultiplicity(int edge);
    int edge() const noexcept { return edge_; }

private:
    int edge_;
};

class OrientationConflict : public Error {
public:
    explicit OrientationConflict(int node);
    int node() const noexcept { return node_; }

private:
    int node_;
};

class NonPlanar : public Error {
public:
    using Error::Error;
};

/// A generator of the module ideal does not vanish. `generator` is the
/// 1-based position in the generator list; witness is (A, x, y, z), 0-based.
class RelationViolation : public Error {
public:
    RelationViolation(int generator, std::vector<int> witness);

    int generator() const noexcept { return generator_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    int generator_;
    std::vector<int> witness_;
};

class NonUnit : public Error {
public:
    using Error::Error;
};

class SizeGuard : public Error {
public:
    using Error::Error;
};

/// Shadow label propagation hit a contradiction. Never raised for validated
/// inputs; signals a convention bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace vbs
