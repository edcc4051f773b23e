#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

#include "thetadiv/pfaffian.hpp"
#include "thetadiv/singular.hpp"

namespace thetadiv {

/// Structured text schema shared by the CLI and the serializers. One record
/// per line, '#' starts a comment:
///
///   genus 2
///   tau 1 1 {0, 1}            # upper triangle, 1-based, complex {re, im}
///   tau 1 2 {0.1, 0}
///   tau 2 2 {0, 2}
///   z 1 {0.25, -0.5}          # evaluation point (defaults to 0)
///   char 10|01                # characteristic bits eps|delta
///   provenance two_torsion 10|01      # or: product G1 G2 | manual
///   skew 4                    # rational matrix block: "p/q" entries
///   0 1/2 0 0
///   -1/2 0 0 0
///   0 0 0 3
///   0 0 -3 0
///   petri 5 6                 # same layout for rectangular maps
///   ...
struct ParsedInput {
  std::optional<PeriodMatrix> tau;
  std::optional<Eigen::VectorXcd> z;
  std::optional<Characteristic> chi;
  std::optional<Provenance> provenance;
  std::optional<Characteristic> provenance_char;
  std::optional<std::pair<int, int>> provenance_split;
  std::optional<RatMatrix> rational_matrix;
  std::string rational_kind;  // "skew", "petri" or empty

  /// Assembles a SingCandidate from tau/z/provenance; z defaults to the
  /// two-torsion point when the provenance says so.
  SingCandidate candidate() const;
};

ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_file(const std::string& path);

std::string format_complex(std::complex<double> v);          // "{re, im}"
std::complex<double> parse_complex(std::string_view s);

std::string serialize_period_matrix(const PeriodMatrix& tau);
std::string serialize_candidate(const SingCandidate& c);

/// Aligned human-readable table.
std::string format_report_table(const SingReport& r);
/// One "key value" pair per line.
std::string format_report_records(const SingReport& r);

}  // namespace thetadiv
