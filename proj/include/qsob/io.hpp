#pragma once

// Text and JSON forms of scalars, polynomials and family tables.
//   scalar:     "p/q" (exact) or shortest round-trip decimal (float)
//   polynomial: JSON array of coefficient strings, ascending degree ([] is zero)
//   CSV:        header row, one polynomial per line, coefficients ascending

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "qsob/context.hpp"
#include "qsob/poly.hpp"
#include "qsob/qhermite.hpp"
#include "qsob/ratfn.hpp"
#include "qsob/sobolev.hpp"

namespace qsob::io {

using nlohmann::json;

template <Scalar S>
S parse_scalar(const std::string& text, const QContext<S>& ctx) {
  if constexpr (ExactScalar<S>) {
    return parse_rational(text);
  } else {
    if (text.find('/') != std::string::npos) return ctx.lift(parse_rational(text));
    return Real::parse(text, ctx.precision());
  }
}

template <Scalar S>
json poly_to_json(const Poly<S>& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

template <Scalar S>
Poly<S> poly_from_json(const json& arr, const QContext<S>& ctx) {
  std::vector<S> v;
  for (const auto& c : arr) v.push_back(parse_scalar(c.get<std::string>(), ctx));
  return Poly<S>(std::move(v));
}

template <Scalar S>
json ratfn_to_json(const RationalFn<S>& r) {
  return {{"num", poly_to_json(r.numerator())}, {"den", poly_to_json(r.denominator())}};
}

template <Scalar S>
RationalFn<S> ratfn_from_json(const json& j, const QContext<S>& ctx) {
  return RationalFn<S>::make(poly_from_json(j.at("num"), ctx), poly_from_json(j.at("den"), ctx));
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + "\n";
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

/// Coefficient cells of a CSV row starting at `first`, trailing empty cells dropped.
template <Scalar S>
Poly<S> poly_from_csv_cells(const std::vector<std::string>& cells, std::size_t first, const QContext<S>& ctx) {
  std::vector<S> v;
  std::size_t last = cells.size();
  while (last > first && cells[last - 1].empty()) --last;
  for (std::size_t i = first; i < last; ++i) v.push_back(parse_scalar(cells[i], ctx));
  return Poly<S>(std::move(v));
}

inline const char* mode_name(bool exact) { return exact ? "exact" : "float"; }

/// H_0..H_{n_max} with gamma_n and nu_n.
template <Scalar S>
json hermite_table_json(const HermiteFamily<S>& fam, long n_max) {
  json rows = json::array();
  for (long n = 0; n <= n_max; ++n) {
    rows.push_back({{"n", n},
                    {"coeffs", poly_to_json(fam.hermite(n))},
                    {"gamma", n == 0 ? json(nullptr) : json(to_string(fam.gamma(n)))},
                    {"nu", to_string(fam.norm_sq_normalized(n))}});
  }
  return {{"q", to_string(fam.context().q())}, {"mode", mode_name(ExactScalar<S>)}, {"n_max", n_max}, {"rows", rows}};
}

template <Scalar S>
std::string hermite_table_csv(const HermiteFamily<S>& fam, long n_max) {
  std::vector<std::string> header{"n", "gamma", "nu"};
  for (long k = 0; k <= n_max; ++k) header.push_back("c" + std::to_string(k));
  std::string out = csv_line(header);
  for (long n = 0; n <= n_max; ++n) {
    std::vector<std::string> row{std::to_string(n), n == 0 ? "" : to_string(fam.gamma(n)),
                                 to_string(fam.norm_sq_normalized(n))};
    for (const auto& c : fam.hermite(n).coeffs()) row.push_back(to_string(c));
    row.resize(header.size());
    out += csv_line(row);
  }
  return out;
}

/// Family dump: {q, alpha, mass_convention, mass, degrees, S, dq_at_alpha[, connection]}.
template <Scalar S>
json sobolev_table_json(const SobolevFamily<S>& sfam, long n_max, bool with_coeffs) {
  json degrees = json::array();
  json polys = json::array();
  json dq = json::array();
  for (long n = 0; n <= n_max; ++n) {
    degrees.push_back(n);
    polys.push_back(poly_to_json(sfam.s_poly(n)));
    dq.push_back(n == 0 ? std::string("0") : to_string(sfam.dq_s_at_alpha(n)));
  }
  const auto& p = sfam.params();
  json out = {{"q", to_string(sfam.context().q())},
              {"alpha", to_string(p.alpha)},
              {"mass_convention", to_string(p.convention)},
              {"mass", to_string(p.mass)},
              {"mode", mode_name(ExactScalar<S>)},
              {"degrees", degrees},
              {"S", polys},
              {"dq_at_alpha", dq}};
  if constexpr (ExactScalar<S>) {
    if (with_coeffs) {
      json conn = json::array();
      for (long n = 2; n <= n_max; ++n) {
        const auto cc = sfam.connection_coeffs(n);
        conn.push_back({{"n", n},
                        {"E1", ratfn_to_json(cc.E1)}, {"F1", ratfn_to_json(cc.F1)},
                        {"E2", ratfn_to_json(cc.E2)}, {"F2", ratfn_to_json(cc.F2)},
                        {"E3", ratfn_to_json(cc.E3)}, {"F3", ratfn_to_json(cc.F3)},
                        {"Xi", ratfn_to_json(cc.Xi)},
                        {"E4", ratfn_to_json(cc.E4)}, {"F4", ratfn_to_json(cc.F4)}});
      }
      out["connection"] = conn;
    }
  }
  return out;
}

template <Scalar S>
std::string sobolev_table_csv(const SobolevFamily<S>& sfam, long n_max) {
  std::vector<std::string> header{"n", "dq_at_alpha"};
  for (long k = 0; k <= n_max; ++k) header.push_back("c" + std::to_string(k));
  std::string out = csv_line(header);
  for (long n = 0; n <= n_max; ++n) {
    std::vector<std::string> row{std::to_string(n), n == 0 ? "0" : to_string(sfam.dq_s_at_alpha(n))};
    const Poly<S> s = sfam.s_poly(n);
    for (const auto& c : s.coeffs()) row.push_back(to_string(c));
    row.resize(header.size());
    out += csv_line(row);
  }
  return out;
}

}  // namespace qsob::io
