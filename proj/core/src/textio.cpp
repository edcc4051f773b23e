#include "thetadiv/textio.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "thetadiv/errors.hpp"

namespace thetadiv {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in number '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad number '" + s + "'");
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  // complex braces may contain spaces; normalize "{a, b}" into one token
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if ((c == ' ' || c == '\t' || c == '\r') && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::string format_complex(std::complex<double> v) {
  return "{" + fmt_double(v.real()) + ", " + fmt_double(v.imag()) + "}";
}

std::complex<double> parse_complex(std::string_view s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("complex value must look like {re, im}: '" + std::string(s) + "'");
  std::string body(s.substr(1, s.size() - 2));
  size_t comma = body.find(',');
  if (comma == std::string::npos) throw ParseError("complex value missing comma");
  auto trim = [](std::string t) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  return {parse_double(trim(body.substr(0, comma))), parse_double(trim(body.substr(comma + 1)))};
}

ParsedInput parse_input(std::istream& in) {
  ParsedInput p;
  int genus = 0;
  std::map<std::pair<int, int>, std::complex<double>> tau_entries;
  std::map<int, std::complex<double>> z_entries;

  std::string line;
  int pending_matrix_rows = 0;
  std::vector<std::vector<Rational>> matrix_rows;
  int matrix_cols = 0;

  while (std::getline(in, line)) {
    auto tok = tokens(line);
    if (tok.empty()) continue;

    if (pending_matrix_rows > 0) {
      if ((int)tok.size() != matrix_cols)
        throw ParseError("matrix row has " + std::to_string(tok.size()) + " entries, expected " +
                          std::to_string(matrix_cols));
      std::vector<Rational> row;
      for (auto& t : tok) row.push_back(Rational::parse(t));
      matrix_rows.push_back(std::move(row));
      if (--pending_matrix_rows == 0) p.rational_matrix = RatMatrix::from_rows(matrix_rows);
      continue;
    }

    const std::string& key = tok[0];
    if (key == "genus") {
      if (tok.size() != 2) throw ParseError("genus needs one value");
      genus = std::stoi(tok[1]);
    } else if (key == "tau") {
      if (tok.size() != 4) throw ParseError("tau needs: tau J K {re, im}");
      int j = std::stoi(tok[1]), k = std::stoi(tok[2]);
      if (j < 1 || k < j) throw ParseError("tau indices must satisfy 1 <= J <= K");
      tau_entries[{j, k}] = parse_complex(tok[3]);
    } else if (key == "z") {
      if (tok.size() != 3) throw ParseError("z needs: z J {re, im}");
      int j = std::stoi(tok[1]);
      if (j < 1) throw ParseError("z index must be >= 1");
      z_entries[j] = parse_complex(tok[2]);
    } else if (key == "char") {
      if (tok.size() != 2) throw ParseError("char needs one bit string");
      p.chi = Characteristic::parse(tok[1]);
    } else if (key == "provenance") {
      if (tok.size() < 2) throw ParseError("provenance needs a kind");
      if (tok[1] == "two_torsion") {
        if (tok.size() != 3) throw ParseError("provenance two_torsion needs a characteristic");
        p.provenance = Provenance::TwoTorsion;
        p.provenance_char = Characteristic::parse(tok[2]);
      } else if (tok[1] == "product") {
        if (tok.size() != 4) throw ParseError("provenance product needs the two genera");
        p.provenance = Provenance::Product;
        p.provenance_split = {std::stoi(tok[2]), std::stoi(tok[3])};
      } else if (tok[1] == "manual") {
        p.provenance = Provenance::Manual;
      } else {
        throw ParseError("unknown provenance '" + tok[1] + "'");
      }
    } else if (key == "skew" || key == "petri") {
      p.rational_kind = key;
      if (key == "skew") {
        if (tok.size() != 2) throw ParseError("skew needs a dimension");
        matrix_cols = std::stoi(tok[1]);
        pending_matrix_rows = matrix_cols;
      } else {
        if (tok.size() != 3) throw ParseError("petri needs rows and columns");
        pending_matrix_rows = std::stoi(tok[1]);
        matrix_cols = std::stoi(tok[2]);
      }
      matrix_rows.clear();
    } else {
      throw ParseError("unknown record '" + key + "'");
    }
  }
  if (pending_matrix_rows > 0) throw ParseError("matrix block ended early");

  if (!tau_entries.empty()) {
    int g = genus;
    if (g == 0)
      for (auto& [jk, v] : tau_entries) g = std::max(g, jk.second);
    std::vector<std::complex<double>> upper;
    for (int j = 1; j <= g; ++j)
      for (int k = j; k <= g; ++k) {
        auto it = tau_entries.find({j, k});
        if (it == tau_entries.end())
          throw ParseError("missing tau " + std::to_string(j) + " " + std::to_string(k));
        upper.push_back(it->second);
      }
    p.tau = PeriodMatrix::from_upper(g, upper);
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(g);
    for (auto& [j, v] : z_entries) {
      if (j > g) throw ParseError("z index exceeds genus");
      z(j - 1) = v;
    }
    if (!z_entries.empty()) p.z = z;
  } else if (!z_entries.empty()) {
    throw ParseError("z records without a tau block");
  }
  return p;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return parse_input(in);
}

SingCandidate ParsedInput::candidate() const {
  if (!tau) throw Error("input has no period matrix");
  SingCandidate c{*tau, Eigen::VectorXcd::Zero(tau->genus()), Provenance::Manual,
                  std::nullopt, std::nullopt};
  if (provenance) c.provenance = *provenance;
  if (provenance_char) {
    c.two_torsion_char = provenance_char;
    c.z = two_torsion_point(*tau, *provenance_char);
  }
  if (provenance_split) c.product_split = provenance_split;
  if (z) c.z = *z;
  return c;
}

std::string serialize_period_matrix(const PeriodMatrix& tau) {
  std::ostringstream os;
  os << "genus " << tau.genus() << "\n";
  for (int j = 0; j < tau.genus(); ++j)
    for (int k = j; k < tau.genus(); ++k)
      os << "tau " << (j + 1) << " " << (k + 1) << " " << format_complex(tau.tau()(j, k))
         << "\n";
  return os.str();
}

std::string serialize_candidate(const SingCandidate& c) {
  std::ostringstream os;
  os << serialize_period_matrix(c.tau);
  for (int j = 0; j < c.z.size(); ++j)
    os << "z " << (j + 1) << " " << format_complex(c.z(j)) << "\n";
  switch (c.provenance) {
    case Provenance::TwoTorsion:
      os << "provenance two_torsion " << (c.two_torsion_char ? c.two_torsion_char->str() : "")
         << "\n";
      break;
    case Provenance::Product:
      os << "provenance product " << c.product_split->first << " " << c.product_split->second
         << "\n";
      break;
    case Provenance::Manual:
      os << "provenance manual\n";
      break;
  }
  return os.str();
}

std::string format_report_table(const SingReport& r) {
  std::ostringstream os;
  char buf[96];
  std::snprintf(buf, sizeof buf, "  %-18s %.3e\n", "|theta|", r.value_norm);
  os << buf;
  std::snprintf(buf, sizeof buf, "  %-18s %.3e\n", "|grad|", r.grad_norm);
  os << buf;
  std::snprintf(buf, sizeof buf, "  %-18s", "sing. values");
  os << buf;
  for (double s : r.hess_singular_values) {
    std::snprintf(buf, sizeof buf, " %.3e", s);
    os << buf;
  }
  os << "\n";
  std::snprintf(buf, sizeof buf, "  %-18s %d%s\n", "numeric rank", r.numeric_rank,
                r.hess_degenerate ? "  (degenerate)" : "");
  os << buf;
  std::snprintf(buf, sizeof buf, "  %-18s %s\n", "singular", r.singular ? "yes" : "no");
  os << buf;
  std::snprintf(buf, sizeof buf, "  %-18s snull=%d sdec=%d\n", "classification",
                (int)r.in_snull, (int)r.in_sdec);
  os << buf;
  return os.str();
}

std::string format_report_records(const SingReport& r) {
  std::ostringstream os;
  os << "value_norm " << fmt_double(r.value_norm) << "\n";
  os << "grad_norm " << fmt_double(r.grad_norm) << "\n";
  os << "hess_singular_values";
  for (double s : r.hess_singular_values) os << " " << fmt_double(s);
  os << "\n";
  os << "numeric_rank " << r.numeric_rank << "\n";
  os << "singular " << (r.singular ? 1 : 0) << "\n";
  os << "in_snull " << (r.in_snull ? 1 : 0) << "\n";
  os << "in_sdec " << (r.in_sdec ? 1 : 0) << "\n";
  os << "hess_degenerate " << (r.hess_degenerate ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace thetadiv
