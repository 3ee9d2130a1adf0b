/// @file  io.hpp
/// @brief Text formats: tensor trains, BDDs, DIMACS CNF, weights, orders
///
/// All readers throw parse_error carrying the source name and the 1-based
/// line of the offending token. `#` starts a comment in .tt, .bdd, weights
/// and order files.

#pragma once

#include "ttkc/logic.hpp"
#include "ttkc/obdd.hpp"
#include "ttkc/ops.hpp"
#include "ttkc/tensor_train.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ttkc {

void write_tt(std::ostream &out, const tensor_train &tt);
tensor_train read_tt(std::istream &in, const std::string &source = "<tt>");

/// `bdd 1 / arity / root / node id var lo hi`. An `order` line listing the
/// variable permutation is written only for non-natural orders.
void write_bdd(std::ostream &out, const obdd &b);
/// Node ids are renumbered children-first from the root; unreachable nodes
/// are dropped.
obdd read_bdd(std::istream &in, const std::string &source = "<bdd>");

struct cnf {
  std::size_t arity = 0;
  std::vector<clause> clauses;
};

cnf read_dimacs(std::istream &in, const std::string &source = "<cnf>");

/// Lines `<var> <negative weight> <positive weight>`; every variable of
/// [1, arity] must appear exactly once.
weight_spec read_weights(std::istream &in, std::size_t arity,
                         const std::string &source = "<weights>");

/// Whitespace-separated permutation of 1..arity
std::vector<var_t> read_order(std::istream &in, std::size_t arity,
                              const std::string &source = "<order>");

/// File wrappers; an unreadable path is reported as parse_error at line 0.
tensor_train load_tt(const std::string &path);
void save_tt(const std::string &path, const tensor_train &tt);
obdd load_bdd(const std::string &path);
void save_bdd(const std::string &path, const obdd &b);
cnf load_dimacs(const std::string &path);
weight_spec load_weights(const std::string &path, std::size_t arity);
std::vector<var_t> load_order(const std::string &path, std::size_t arity);

} // namespace ttkc
