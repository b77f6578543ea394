// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "surge/errors.hpp"

namespace surge {

MolecularProblem::MolecularProblem(int n_spatial, int n_electrons, int ms2)
    : n_spatial_(n_spatial), n_electrons_(n_electrons), ms2_(ms2) {
  if (n_spatial < 0) throw Error("negative orbital count");
  const auto n = static_cast<std::size_t>(n_spatial);
  const std::size_t npair = n * (n + 1) / 2;
  h1_.assign(n * n, 0.0);
  h2_.assign(npair * (npair + 1) / 2, 0.0);
}

void MolecularProblem::check_index(int p) const {
  if (p < 0 || p >= n_spatial_) {
    throw IndexError("orbital index " + std::to_string(p) + " outside [0, " +
                     std::to_string(n_spatial_) + ")");
  }
}

std::size_t MolecularProblem::pair_index(int p, int q) const {
  if (p < q) std::swap(p, q);
  return static_cast<std::size_t>(p) * (p + 1) / 2 + q;
}

std::size_t MolecularProblem::quad_index(int p, int q, int r, int s) const {
  std::size_t pq = pair_index(p, q);
  std::size_t rs = pair_index(r, s);
  if (pq < rs) std::swap(pq, rs);
  return pq * (pq + 1) / 2 + rs;
}

double MolecularProblem::h1(int p, int q) const {
  check_index(p);
  check_index(q);
  return h1_[static_cast<std::size_t>(p) * n_spatial_ + q];
}

double MolecularProblem::h2(int p, int q, int r, int s) const {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  return h2_[quad_index(p, q, r, s)];
}

void MolecularProblem::set_h1(int p, int q, double v) {
  check_index(p);
  check_index(q);
  h1_[static_cast<std::size_t>(p) * n_spatial_ + q] = v;
  h1_[static_cast<std::size_t>(q) * n_spatial_ + p] = v;
}

void MolecularProblem::set_h2(int p, int q, int r, int s, double v) {
  check_index(p);
  check_index(q);
  check_index(r);
  check_index(s);
  h2_[quad_index(p, q, r, s)] = v;
}

void MolecularProblem::set_orbsym(std::vector<int> labels) { orbsym_ = std::move(labels); }

void MolecularProblem::set_orbital_energy(int p, double e) {
  check_index(p);
  if (orbital_energies_.size() < static_cast<std::size_t>(n_spatial_)) {
    orbital_energies_.resize(static_cast<std::size_t>(n_spatial_), 0.0);
  }
  orbital_energies_[static_cast<std::size_t>(p)] = e;
}

std::vector<MolecularProblem::IntegralEntry> MolecularProblem::unique_two_electron() const {
  std::vector<IntegralEntry> out;
  for (int p = 0; p < n_spatial_; ++p) {
    for (int q = 0; q <= p; ++q) {
      for (int r = 0; r <= p; ++r) {
        for (int s = 0; s <= r; ++s) {
          if (pair_index(r, s) > pair_index(p, q)) continue;
          const double v = h2_[quad_index(p, q, r, s)];
          if (v != 0.0) out.push_back({p, q, r, s, v});
        }
      }
    }
  }
  return out;
}

void MolecularProblem::validate() const {
  if (n_electrons_ < 0 || n_electrons_ > n_qubits()) {
    throw Error("electron count " + std::to_string(n_electrons_) + " incompatible with " +
                std::to_string(n_qubits()) + " spin-orbitals");
  }
  if ((n_electrons_ + ms2_) % 2 != 0 || std::abs(ms2_) > n_electrons_) {
    throw Error("MS2 inconsistent with electron count");
  }
  if (!orbsym_.empty()) {
    if (orbsym_.size() != static_cast<std::size_t>(n_spatial_)) {
      throw Error("ORBSYM length differs from NORB");
    }
    for (int label : orbsym_) {
      if (label < 1) throw Error("ORBSYM labels must be >= 1");
    }
  }
}

std::vector<int> hf_occupation(const MolecularProblem& problem) {
  if (problem.n_electrons() % 2 != 0) {
    throw UnsupportedError("open-shell reference: odd electron count");
  }
  std::vector<int> occ;
  for (int i = 0; i < problem.n_electrons() / 2; ++i) {
    occ.push_back(spin_orbital(i, 0));
    occ.push_back(spin_orbital(i, 1));
  }
  return occ;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool parse_int(std::string_view tok, int& out) {
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
  while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Fortran writes exponents as D; accept both.
bool parse_double(std::string tok, double& out) {
  std::replace(tok.begin(), tok.end(), 'D', 'E');
  std::replace(tok.begin(), tok.end(), 'd', 'e');
  char* end = nullptr;
  out = std::strtod(tok.c_str(), &end);
  return end != tok.c_str() && *end == '\0';
}

struct Header {
  int norb = -1;
  int nelec = -1;
  int ms2 = 0;
  std::vector<int> orbsym;
};

// Collect "KEY=v1,v2,..." assignments of the namelist block.
Header parse_header(const std::string& block, int first_line) {
  Header h;
  std::map<std::string, std::vector<std::string>> values;
  std::string current;
  std::string body = block;
  std::replace(body.begin(), body.end(), '\n', ',');
  std::string token;
  auto flush = [&](std::string tok) {
    const auto b = tok.find_first_not_of(" \t\r");
    if (b == std::string::npos) return;
    tok = tok.substr(b, tok.find_last_not_of(" \t\r") - b + 1);
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      current = upper(tok.substr(0, eq));
      current.erase(std::remove_if(current.begin(), current.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    current.end());
      tok = tok.substr(eq + 1);
      values[current];
      const auto vb = tok.find_first_not_of(" \t\r");
      if (vb == std::string::npos) return;
      tok = tok.substr(vb);
    }
    if (current.empty()) throw ParseError("value without key in namelist header", first_line);
    values[current].push_back(tok);
  };
  for (char c : body) {
    if (c == ',') {
      flush(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  flush(token);

  auto scalar = [&](const std::string& key, int& out, bool required) {
    auto it = values.find(key);
    if (it == values.end() || it->second.empty()) {
      if (required) throw ParseError("namelist header lacks " + key, first_line);
      return;
    }
    if (it->second.size() != 1 || !parse_int(it->second.front(), out)) {
      throw ParseError("bad value for " + key, first_line);
    }
  };
  scalar("NORB", h.norb, true);
  scalar("NELEC", h.nelec, true);
  scalar("MS2", h.ms2, false);
  if (auto it = values.find("ORBSYM"); it != values.end()) {
    for (const auto& v : it->second) {
      int label = 0;
      if (!parse_int(v, label)) throw ParseError("bad ORBSYM entry '" + v + "'", first_line);
      h.orbsym.push_back(label);
    }
  }
  if (h.norb < 0) throw ParseError("NORB must be non-negative", first_line);
  return h;
}

}  // namespace

MolecularProblem parse_fcidump(std::istream& in) {
  std::string line;
  int lineno = 0;

  // Header: from "&FCI" up to a line holding "/" or "&END".
  std::string block;
  bool started = false;
  bool finished = false;
  int header_line = 1;
  while (!finished && std::getline(in, line)) {
    ++lineno;
    std::string u = upper(line);
    if (!started) {
      const auto pos = u.find("&FCI");
      if (pos == std::string::npos) {
        if (u.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ParseError("expected '&FCI' namelist header", lineno);
      }
      started = true;
      header_line = lineno;
      u = u.substr(pos + 4);
      line = line.substr(pos + 4);
    }
    auto end_pos = u.find("&END");
    const auto slash = u.find('/');
    if (slash != std::string::npos && (end_pos == std::string::npos || slash < end_pos)) {
      end_pos = slash;
    }
    if (end_pos != std::string::npos) {
      block += line.substr(0, end_pos);
      finished = true;
    } else {
      block += line;
      block += '\n';
    }
  }
  if (!started) throw ParseError("empty input", lineno);
  if (!finished) throw ParseError("unterminated namelist header", header_line);

  const Header h = parse_header(block, header_line);
  MolecularProblem problem(h.norb, h.nelec, h.ms2);
  if (!h.orbsym.empty()) {
    if (h.orbsym.size() != static_cast<std::size_t>(h.norb)) {
      throw ParseError("ORBSYM has " + std::to_string(h.orbsym.size()) + " entries, NORB=" +
                           std::to_string(h.norb),
                       header_line);
    }
    problem.set_orbsym(h.orbsym);
  }

  bool have_core = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;
    double value = 0.0;
    int idx[4];
    if (!parse_double(vtok, value)) throw ParseError("bad integral value '" + vtok + "'", lineno);
    for (int& k : idx) {
      std::string t;
      if (!(ls >> t) || !parse_int(t, k)) throw ParseError("expected four integer indices", lineno);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens on integral line", lineno);
    for (int k : idx) {
      if (k < 0 || k > h.norb) {
        throw IndexError("line " + std::to_string(lineno) + ": index " + std::to_string(k) +
                         " outside [0, " + std::to_string(h.norb) + "]");
      }
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      problem.set_core_energy(value);
      have_core = true;
    } else if (k == 0 && l == 0) {
      if (i == 0) throw ParseError("malformed one-electron line", lineno);
      if (j == 0) {
        problem.set_orbital_energy(i - 1, value);
      } else {
        problem.set_h1(i - 1, j - 1, value);
      }
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) {
        throw ParseError("two-electron line with a zero index", lineno);
      }
      problem.set_h2(i - 1, j - 1, k - 1, l - 1, value);
    }
  }
  if (!have_core) problem.add_warning("missing_core_energy");
  if (h.orbsym.empty()) problem.add_warning("missing_orbsym");
  problem.validate();
  return problem;
}

MolecularProblem parse_fcidump_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fcidump(in);
}

MolecularProblem load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FCIDUMP file '" + path + "'");
  return parse_fcidump(in);
}

std::string write_fcidump(const MolecularProblem& problem) {
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, " &FCI NORB=%d,NELEC=%d,MS2=%d,\n", problem.n_spatial(),
                problem.n_electrons(), problem.ms2());
  out += buf;
  if (problem.has_orbsym()) {
    out += "  ORBSYM=";
    for (int label : problem.orbsym()) out += std::to_string(label) + ",";
    out += "\n";
  }
  out += "  ISYM=1,\n &END\n";
  for (const auto& e : problem.unique_two_electron()) {
    std::snprintf(buf, sizeof buf, "%.16e %4d %4d %4d %4d\n", e.value, e.p + 1, e.q + 1, e.r + 1,
                  e.s + 1);
    out += buf;
  }
  const int n = problem.n_spatial();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      const double v = problem.h1(p, q);
      if (v == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.16e %4d %4d %4d %4d\n", v, p + 1, q + 1, 0, 0);
      out += buf;
    }
  }
  const auto& eps = problem.orbital_energies();
  for (std::size_t p = 0; p < eps.size(); ++p) {
    std::snprintf(buf, sizeof buf, "%.16e %4zu %4d %4d %4d\n", eps[p], p + 1, 0, 0, 0);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%.16e %4d %4d %4d %4d\n", problem.core_energy(), 0, 0, 0, 0);
  out += buf;
  return out;
}

}  // namespace surge
