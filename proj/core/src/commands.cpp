// Copyright 2026 The entgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entgen/commands.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "entgen/dynamics.hpp"
#include "entgen/model_io.hpp"
#include "entgen/search.hpp"

namespace entgen {

namespace {

std::string fmt(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

std::string fmt(Complex z) {
  double re = z.real(), im = z.imag();
  if (re == 0.0) re = 0.0;  // drop the sign of -0.0
  if (im == 0.0) im = 0.0;
  std::ostringstream out;
  out << fmt(re);
  if (im >= 0.0)
    out << "+" << fmt(im) << "i";
  else
    out << "-" << fmt(-im) << "i";
  return out.str();
}

void print_vector(std::ostream& out, const std::string& label,
                  const Vector& v) {
  out << label << " = [";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << fmt(v(i));
  }
  out << "]\n";
}

void print_matrix(std::ostream& out, const std::string& label,
                  const Matrix& m) {
  out << label << " =\n";
  for (int r = 0; r < m.rows(); ++r) {
    out << "  [";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ", ";
      out << fmt(m(r, c));
    }
    out << "]\n";
  }
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kEntangling: return "entangling";
    case Verdict::kNoViolation: return "no_violation";
    case Verdict::kMarginal: return "marginal";
  }
  return "?";
}

const char* resolution_name(Resolution r) {
  switch (r) {
    case Resolution::kEntangling: return "entangling";
    case Resolution::kNoViolation: return "no_violation";
    case Resolution::kUndecided: return "undecided";
  }
  return "?";
}

std::string index_set_name(const std::vector<int>& idx) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out << ",";
    out << idx[i];
  }
  out << "}";
  return out.str();
}

}  // namespace

int cmd_validate(const std::string& model_path, std::ostream& out) {
  const GeneratorModel model = instantiate(parse_model_file(model_path));
  const CpReport report = validate_cp(model.kossakowski);
  out << "kossakowski eigenvalues:";
  for (int i = 0; i < report.eigenvalues.size(); ++i)
    out << " " << fmt(report.eigenvalues(i));
  out << "\nmin_eigenvalue: " << fmt(report.min_eigenvalue) << "\n";
  out << "is_cp: " << (report.is_cp ? "true" : "false") << "\n";
  return report.is_cp ? kExitOk : kExitNotCp;
}

int cmd_witness(const std::string& model_path, const std::string& state_spec,
                std::ostream& out, double tol_minor) {
  const GeneratorModel model = instantiate(parse_model_file(model_path));
  const ProductState state = parse_state_spec(state_spec, model.basis);

  const FlipVectors flips = flip_vectors(state, model.basis);
  out << "d = " << model.basis.d << ", basis = " << model.basis.kind << "\n";
  for (size_t i = 0; i < flips.u.size(); ++i)
    print_vector(out, "u^(" + std::to_string(i + 2 + model.basis.d - 1) + ")",
                 flips.u[i]);
  for (size_t i = 0; i < flips.v.size(); ++i)
    print_vector(out, "v^(" + std::to_string(i + 2) + ")", flips.v[i]);

  const WitnessMatrix wm = witness_matrix_from_flips(model, flips);
  print_matrix(out, "M", wm.m);

  const ResolvedVerdict rv = resolved_verdict(model, state, tol_minor);
  out << "non-skipped principal minors:\n";
  for (const MinorReport& r : rv.first_order.minors) {
    if (r.skipped) continue;
    out << "  " << index_set_name(r.index_set) << ": " << fmt(r.value) << "\n";
  }
  out << "first_order_verdict: " << verdict_name(rv.first_order.verdict)
      << "\n";
  if (!rv.first_order.kossakowski_psd)
    out << "warning: kossakowski matrix is not positive semidefinite\n";
  if (rv.first_order.certificate) {
    out << "certificate: minor "
        << index_set_name(rv.first_order.certificate->index_set) << " = "
        << fmt(rv.first_order.certificate->value) << "\n";
  }
  if (rv.marginal) {
    out << "k=2 coefficients:";
    for (double c : rv.marginal->k2_coefficients) out << " " << fmt(c);
    out << "\n";
    if (!rv.marginal->k3_coefficients.empty()) {
      out << "k=3 coefficients:";
      for (double c : rv.marginal->k3_coefficients) out << " " << fmt(c);
      out << "\n";
    }
    if (rv.marginal->decided_order > 0)
      out << "decided_at: k=" << rv.marginal->decided_order
          << " coefficient " << fmt(rv.marginal->coefficient) << "\n";
  }
  out << "resolved_verdict: " << resolution_name(rv.resolution) << "\n";
  return kExitOk;
}

int cmd_evolve(const std::string& model_path, const std::string& state_spec,
               double t_max, int steps, std::ostream& out) {
  const GeneratorModel model = instantiate(parse_model_file(model_path));
  const ProductState state = parse_state_spec(state_spec, model.basis);
  if (t_max <= 0.0 || steps < 2)
    throw std::invalid_argument("evolve: need t_max > 0 and steps >= 2");
  const NegativityCurve curve = negativity_curve(model, state, t_max, steps);
  out << "t,negativity,min_pt_eigenvalue,trace_error\n";
  for (size_t i = 0; i < curve.times.size(); ++i) {
    out << fmt(curve.times[i]) << "," << fmt(curve.negativities[i]) << ","
        << fmt(curve.min_pt_eigenvalues[i]) << "," << fmt(curve.trace_errors[i])
        << "\n";
  }
  return kExitOk;
}

int cmd_scan(const std::string& model_path, const std::string& scan_path,
             std::ostream& out, std::uint64_t seed) {
  const ParsedModel parsed = parse_model_file(model_path);
  const ScanSpec spec = parse_scan_spec_file(scan_path);

  for (const std::string& name : {spec.p1.name, spec.p2.name})
    if (!parsed.parameters.count(name))
      throw ParseError("scan: parameter '" + name +
                       "' is not declared in the model file");

  out << "p1,p2,is_cp,min_minor,verdict,onset_t\n";
  for (int i = 0; i < spec.p1.steps; ++i) {
    for (int j = 0; j < spec.p2.steps; ++j) {
      const double x1 = spec.p1.value(i);
      const double x2 = spec.p2.value(j);
      const GeneratorModel model =
          instantiate(parsed, {{spec.p1.name, x1}, {spec.p2.name, x2}});

      std::string is_cp_field, min_minor_field, verdict_field, onset_field;
      bool cp = true;
      if (spec.outputs.count("cp")) {
        cp = validate_cp(model.kossakowski).is_cp;
        is_cp_field = cp ? "1" : "0";
      }

      ProductState state;
      if (spec.search_state) {
        const SearchReport report =
            find_entangling_state(model, spec.search_budget, seed);
        state = report.best_state;
        min_minor_field = fmt(report.best_minor.value);
        verdict_field = report.verdict == SearchVerdict::kCertificateFound
                            ? "entangling"
                            : "no_violation";
      } else {
        state = parse_state_spec(spec.state_spec, model.basis);
        if (spec.outputs.count("minors") || spec.outputs.count("verdict")) {
          const ResolvedVerdict rv = resolved_verdict(model, state);
          double least = 0.0;
          bool first = true;
          for (const MinorReport& r : rv.first_order.minors) {
            if (r.skipped) continue;
            if (first || r.value < least) {
              least = r.value;
              first = false;
            }
          }
          if (spec.outputs.count("minors")) min_minor_field = fmt(least);
          if (spec.outputs.count("verdict"))
            verdict_field = resolution_name(rv.resolution);
        }
      }

      if (spec.outputs.count("onset")) {
        std::vector<double> grid;
        for (int g = 1; g <= spec.onset_steps; ++g)
          grid.push_back(spec.onset_t_max * g / spec.onset_steps);
        const OnsetResult onset = entanglement_onset(model, state, grid);
        if (onset.found) onset_field = fmt(onset.t);
      }

      out << fmt(x1) << "," << fmt(x2) << "," << is_cp_field << ","
          << min_minor_field << "," << verdict_field << "," << onset_field
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_capability(const std::string& model_path, std::ostream& out,
                   int budget, std::uint64_t seed) {
  const ParsedModel parsed = parse_model_file(model_path);
  if (!parsed.has_h12)
    throw ParseError("capability: model file has no h12 block");
  const GeneratorModel model = instantiate(parsed);
  const CapabilityReport report =
      capability(model.hamiltonian.h12, model.basis, budget, seed);
  out << "singular_values:";
  for (int i = 0; i < report.singular_values.size(); ++i)
    out << " " << fmt(report.singular_values(i));
  out << "\neta_max: " << fmt(report.eta_max) << "\n";
  out << "attained: " << fmt(report.attained) << "\n";
  print_vector(out, "maximizer_psi", report.maximizer.psi);
  print_vector(out, "maximizer_phi", report.maximizer.phi);
  return kExitOk;
}

int run_guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ToleranceBreach& e) {
    err << "tolerance breach: " << e.what() << "\n";
    return kExitToleranceBreach;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace entgen
