#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/phi.hpp"
#include "holo/uniqueness.hpp"

namespace holo::corpus {

struct NamedDecomposition {
  std::string name;
  std::vector<Subspace> parts;
};

struct Expected {
  std::optional<std::size_t> p1;
  std::optional<std::size_t> p2;
  std::optional<PhiStatus> phi;
  std::optional<Uniqueness> uniqueness;
};

struct Instance {
  std::string name;
  Representation rep;
  std::vector<NamedDecomposition> decompositions;
  Expected expected;

  const NamedDecomposition* find(const std::string& decomposition) const;
};

/// The nilpotent generator of the split-signature 4-dimensional block.
Matrix wu_nilpotent();

Instance wu_factor();
/// Two copies of wu_factor; the second carries the negated metric.
Instance wu_product();
/// Instances covering each verdict branch.
std::vector<Instance> phi_suite();
Instance identity_instance();

std::vector<Instance> all_instances();
std::optional<Instance> find_instance(const std::string& name);

}  // namespace holo::corpus
