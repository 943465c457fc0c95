#include "vbs/error.hpp"

#include <sstream>

namespace vbs {

namespace {

std::string join_witness(const std::vector<int>& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i] + 1;
    }
    os << ')';
    return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<int> witness)
    : Error("axiom violated: " + axiom + " at " + join_witness(witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

EdgeMultiplicity::EdgeMultiplicity(int edge)
    : Error("edge " + std::to_string(edge) + " does not appear exactly once as head and once as tail"),
      edge_(edge) {}

OrientationConflict::OrientationConflict(int node)
    : Error("orientation conflict at node " + std::to_string(node + 1)), node_(node) {}

RelationViolation::RelationViolation(int generator, std::vector<int> witness)
    : Error("module relation " + std::to_string(generator) + " fails at " + join_witness(witness)),
      generator_(generator),
      witness_(std::move(witness)) {}

}  // namespace vbs
