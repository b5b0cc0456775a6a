#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drobust {

enum class Errc {
  out_of_range_vertex,
  self_loop,
  weight_overflow,
  vertex_out_of_range,
  root_in_u,
  empty_u,
  too_large,
  no_candidate,
  unreachable,
  disconnected_terminals,
  invalid_edge_id,
  wrong_problem,
  invalid_instance,
  exact_too_large,
  too_many_terminals,
  syntax,
  duplicate_header,
  missing_field,
  validation,
  infeasible_spec,
  connectivity_retries_exceeded,
};

constexpr std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::out_of_range_vertex: return "OUT_OF_RANGE_VERTEX";
    case Errc::self_loop: return "SELF_LOOP";
    case Errc::weight_overflow: return "WEIGHT_OVERFLOW";
    case Errc::vertex_out_of_range: return "VERTEX_OUT_OF_RANGE";
    case Errc::root_in_u: return "ROOT_IN_U";
    case Errc::empty_u: return "EMPTY_U";
    case Errc::too_large: return "TOO_LARGE";
    case Errc::no_candidate: return "NO_CANDIDATE";
    case Errc::unreachable: return "UNREACHABLE";
    case Errc::disconnected_terminals: return "DISCONNECTED_TERMINALS";
    case Errc::invalid_edge_id: return "INVALID_EDGE_ID";
    case Errc::wrong_problem: return "WRONG_PROBLEM";
    case Errc::invalid_instance: return "INVALID_INSTANCE";
    case Errc::exact_too_large: return "EXACT_TOO_LARGE";
    case Errc::too_many_terminals: return "TOO_MANY_TERMINALS";
    case Errc::syntax: return "SYNTAX";
    case Errc::duplicate_header: return "DUPLICATE_HEADER";
    case Errc::missing_field: return "MISSING_FIELD";
    case Errc::validation: return "VALIDATION";
    case Errc::infeasible_spec: return "INFEASIBLE_SPEC";
    case Errc::connectivity_retries_exceeded: return "CONNECTIVITY_RETRIES_EXCEEDED";
  }
  return "UNKNOWN";
}

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace drobust
