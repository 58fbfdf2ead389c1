#include <algorithm>
#include <cstdio>

#include "realreg/analysis.hpp"
#include "realreg/error.hpp"

namespace realreg {

namespace {

bool full_dimension(const Dimension& d) {
  return d.integer_radius == d.base || d.value >= 1.0 - 1e-12;
}

}  // namespace

BuchiAutomaton extract_cantor(const BuchiAutomaton& a) {
  if (a.arity() != 1) fail(ErrorKind::ArityError, "Cantor extraction needs an arity-1 automaton");
  const BuchiAutomaton trimmed = trim(a);
  if (full_dimension(hausdorff_dim(close(trimmed))))
    fail(ErrorKind::InteriorPresent, "closure has dimension 1");

  const auto vw = vw_decompose(trimmed);
  RegexPtr uncountable = re_empty();
  for (const auto& component : vw.components) {
    const auto loop = regex_to_automaton(OmegaRegex{vw.alphabet, re_omega(component.period)});
    if (find_nonsparse_witness(loop))
      uncountable = re_union(uncountable, re_concat(component.prefix, re_omega(component.period)));
  }
  if (denotes_empty(*uncountable)) fail(ErrorKind::NoCantor, "every V-W component is countable");
  return close(trim(regex_to_automaton(OmegaRegex{vw.alphabet, uncountable})));
}

std::string to_string(TamenessLabel label) {
  switch (label) {
    case TamenessLabel::DMinimal_NIP: return "DMinimal_NIP";
    case TamenessLabel::TP2: return "TP2";
    case TamenessLabel::HypothesisFails: return "HypothesisFails";
  }
  return "?";
}

TamenessVerdict tameness_verdict(const BuchiAutomaton& a) {
  TamenessVerdict v;
  const BuchiAutomaton trimmed = trim(a);
  v.sparse = !find_nonsparse_witness(trimmed);
  for (int i = 1; i <= a.arity(); ++i) v.coordinate_dims.push_back(hausdorff_dim(close(trim(project(trimmed, i)))));
  if (v.sparse) v.label = TamenessLabel::DMinimal_NIP;
  else if (std::any_of(v.coordinate_dims.begin(), v.coordinate_dims.end(), full_dimension))
    v.label = TamenessLabel::HypothesisFails;
  else v.label = TamenessLabel::TP2;
  return v;
}

std::string TamenessVerdict::str() const {
  std::string out = std::string("sparse=") + (sparse ? "true" : "false") + " dims=[";
  for (std::size_t i = 0; i < coordinate_dims.size(); ++i) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12f", coordinate_dims[i].value);
    out += (i ? "," : "") + std::string(buffer);
  }
  return out + "] label=" + to_string(label);
}

}  // namespace realreg
