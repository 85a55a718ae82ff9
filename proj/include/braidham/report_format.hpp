#pragma once

// JSON and plain-text renderings of the reports produced by the CLI.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "braidham/braid.hpp"
#include "braidham/json_writer.hpp"
#include "braidham/pipeline.hpp"
#include "braidham/sweep.hpp"

namespace braidham {

/// Result of evaluating a braid word on the anyon pair (a(theta), b).
struct WordEvaluation {
  std::string word;
  double theta;
  ComplexMatrix matrix;
  OrderInfo order;
  double distance_from_identity;
};

/// Result of a braid-partner search for a(theta).
struct PartnerSearch {
  double theta;
  SolverConfig config;
  std::optional<BraidSolution> solution;
  double reference_distance = 0.0;  // ||b - anyon_b()||_F when a solution exists
  bool matches_reference = false;
};

namespace format_detail {

inline void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
  w.begin_array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    w.begin_array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      w.begin_array().value(m(r, c).real()).value(m(r, c).imag()).end_array();
    }
    w.end_array();
  }
  w.end_array();
}

inline void write_optional(JsonWriter& w, const std::optional<int>& v) {
  if (v) {
    w.value(*v);
  } else {
    w.null();
  }
}

inline std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

inline std::string order_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("none (> 64)");
}

inline void matrix_text(std::ostringstream& os, const ComplexMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%+.12f%+.12fi", c == 0 ? "" : ", ", m(r, c).real(),
                    m(r, c).imag());
      os << buf;
    }
    os << "]\n";
  }
}

}  // namespace format_detail

inline std::string to_json(const DerivationReport& report) {
  using namespace format_detail;
  JsonWriter w;
  w.begin_object();
  w.key("inputs").begin_object();
  w.field("mass", report.inputs.mass);
  w.key("momentum").begin_array();
  w.value(report.inputs.momentum.p1).value(report.inputs.momentum.p2).value(report.inputs.momentum.p3);
  w.end_array();
  w.field("theta", report.inputs.theta);
  w.field("tol", report.inputs.tol);
  w.field("mode", report.mode == AngleMode::Strict ? "strict" : "exploratory");
  w.end_object();

  w.key("checks").begin_array();
  const double tol = report.inputs.tol;
  for (const auto& r : report.residuals) {
    w.begin_object();
    w.field("name", r.name);
    w.field("residual", r.residual);
    w.field("pass", r.residual < tol);
    w.end_object();
  }
  w.end_array();

  w.key("orders").begin_array();
  write_optional(w, report.order_a);
  write_optional(w, report.order_b);
  w.end_array();

  w.key("decomposability").begin_object();
  w.field("r1_left", report.decomposability.r1_left);
  w.field("r1_right", report.decomposability.r1_right);
  w.field("r2_left", report.decomposability.r2_left);
  w.field("r2_right", report.decomposability.r2_right);
  w.end_object();

  w.field("pass", report.pass);
  w.end_object();
  return w.str();
}

inline std::string to_text(const DerivationReport& report) {
  using namespace format_detail;
  std::ostringstream os;
  const auto& in = report.inputs;
  os << "derivation (" << (report.mode == AngleMode::Strict ? "strict" : "exploratory")
     << ") m = " << in.mass << ", p = (" << in.momentum.p1 << ", " << in.momentum.p2 << ", "
     << in.momentum.p3 << "), theta = " << in.theta << ", tol = " << in.tol << "\n";
  for (const auto& r : report.residuals) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-20s %s  %s\n", r.name.c_str(), number(r.residual).c_str(),
                  r.residual < in.tol ? "ok" : "FAIL");
    os << buf;
  }
  os << "orders: a = " << order_text(report.order_a) << ", b = " << order_text(report.order_b)
     << ", R1 R2 = " << order_text(report.order_r1r2) << " (informational)\n";
  const auto& d = report.decomposability;
  os << "factor residuals (X(x)I, I(x)X): R1 = " << number(d.r1_left) << ", "
     << number(d.r1_right) << "; R2 = " << number(d.r2_left) << ", " << number(d.r2_right)
     << "\n";
  os << "extracted Hamiltonian:\n";
  matrix_text(os, report.extracted_hamiltonian);
  os << "pass: " << (report.pass ? "true" : "false") << "\n";
  return os.str();
}

inline std::string to_json(const SweepSummary& summary) {
  JsonWriter w;
  w.begin_object();
  w.key("inputs").begin_object();
  w.field("samples", summary.samples);
  w.field("seed", summary.seed);
  w.field("tol", summary.tol);
  w.end_object();
  w.key("checks").begin_array();
  for (const auto& c : summary.checks) {
    w.begin_object();
    w.field("name", c.name);
    w.field("max_residual", c.max_residual);
    w.field("pass", c.pass);
    w.end_object();
  }
  w.end_array();
  w.field("min_decomposability", summary.min_decomposability);
  w.field("failed_samples", summary.failed_samples);
  w.field("pass", summary.pass);
  w.end_object();
  return w.str();
}

inline std::string to_text(const SweepSummary& summary) {
  using namespace format_detail;
  std::ostringstream os;
  os << "sweep: " << summary.samples << " samples, seed " << summary.seed << ", tol "
     << summary.tol << "\n";
  for (const auto& c : summary.checks) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %-20s max %s  %s\n", c.name.c_str(),
                  number(c.max_residual).c_str(), c.pass ? "ok" : "FAIL");
    os << buf;
  }
  os << "min factor residual: " << number(summary.min_decomposability) << "\n";
  os << "failed samples: " << summary.failed_samples << "\n";
  os << "pass: " << (summary.pass ? "true" : "false") << "\n";
  return os.str();
}

inline std::string to_json(const WordEvaluation& e) {
  using namespace format_detail;
  JsonWriter w;
  w.begin_object();
  w.key("inputs").begin_object();
  w.field("word", e.word);
  w.field("theta", e.theta);
  w.end_object();
  w.key("matrix");
  write_matrix(w, e.matrix);
  w.key("order");
  write_optional(w, e.order.order);
  w.key("minus_identity").begin_array();
  for (int n : e.order.minus_identity) w.value(n);
  w.end_array();
  w.field("distance_from_identity", e.distance_from_identity);
  w.end_object();
  return w.str();
}

inline std::string to_text(const WordEvaluation& e) {
  using namespace format_detail;
  std::ostringstream os;
  os << "word \"" << e.word << "\" on (a(" << e.theta << "), b):\n";
  matrix_text(os, e.matrix);
  os << "order: " << order_text(e.order.order) << "\n";
  os << "-I at powers:";
  if (e.order.minus_identity.empty()) os << " none";
  for (int n : e.order.minus_identity) os << " " << n;
  os << "\n";
  os << "distance from identity: " << number(e.distance_from_identity) << "\n";
  return os.str();
}

inline std::string to_json(const PartnerSearch& s) {
  using namespace format_detail;
  JsonWriter w;
  w.begin_object();
  w.key("inputs").begin_object();
  w.field("theta", s.theta);
  w.field("seed", static_cast<unsigned long long>(s.config.rng_seed));
  w.field("max_restarts", s.config.max_restarts);
  w.field("residual_target", s.config.residual_target);
  w.field("exclude_trivial", s.config.exclude_trivial);
  w.end_object();
  w.field("found", s.solution.has_value());
  w.key("b");
  if (s.solution) {
    write_matrix(w, s.solution->b);
  } else {
    w.null();
  }
  w.key("residual");
  if (s.solution) {
    w.value(s.solution->residual);
  } else {
    w.null();
  }
  w.key("restart");
  if (s.solution) {
    w.value(s.solution->restart);
  } else {
    w.null();
  }
  w.field("matches_reference_b", s.matches_reference);
  w.field("pass", s.solution.has_value());
  w.end_object();
  return w.str();
}

inline std::string to_text(const PartnerSearch& s) {
  using namespace format_detail;
  std::ostringstream os;
  os << "braid partner search for a(" << s.theta << "), seed " << s.config.rng_seed << ", "
     << s.config.max_restarts << " restarts\n";
  if (!s.solution) {
    os << "no solution with residual < " << number(s.config.residual_target) << "\n";
    return os.str();
  }
  os << "b (restart " << s.solution->restart << "):\n";
  matrix_text(os, s.solution->b);
  os << "braid residual: " << number(s.solution->residual) << "\n";
  os << "matches reference b: " << (s.matches_reference ? "yes" : "no") << " (distance "
     << number(s.reference_distance) << ")\n";
  return os.str();
}

}  // namespace braidham
