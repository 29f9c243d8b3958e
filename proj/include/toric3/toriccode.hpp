#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric3/bounds.hpp"
#include "toric3/gfq.hpp"

namespace toric3::codes {

using gfq::FieldPtr;
using gfq::FiniteField;
using Row = std::vector<std::uint8_t>;  // field elements in the gfq encoding; q <= 256
using Matrix = std::vector<Row>;

struct ToricCode {
  FieldPtr field;
  geom::LatticePolytope polytope;
  std::vector<LatticeVector> monomials;  // lattice points of P, sorted
  Matrix generator;                      // |P| rows of evaluations, n columns
  std::size_t n = 0;
  std::size_t k = 0;  // rank
  bool injective = false;
  std::vector<std::string> warnings;
};

// Columns follow gfq::torus_point order (lex in discrete logs).
ToricCode build_code(const geom::LatticePolytope& p, std::uint32_t q);

// Row-reduced echelon basis.  Pivots are taken greedily along column_order
// (all columns in index order when empty); pivots[i] is the pivot of row i.
Matrix row_reduce(const FiniteField& f, Matrix rows, const std::vector<std::size_t>& column_order = {},
                  std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FiniteField& f, const Matrix& rows);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  unsigned threads = 1;
  // stop as soon as a codeword of weight <= early_stop is seen; the result is
  // then only an upper bound on d
  std::optional<std::uint64_t> early_stop;
  double budget = 1e10;  // coordinate updates allowed to the exhaustive engine
  bool use_symmetry = true;
  std::size_t max_bz_k = 24;
};

struct MinWeightResult {
  std::uint64_t d = 0;
  std::uint64_t codewords = 0;  // codewords visited
  int levels = 0;               // BZ: message weights enumerated
  std::size_t tiles = 0;        // BZ: information sets used in the lower bound
  bool exact = true;            // false after an early stop
  Row witness;                  // a codeword of weight d
};

std::uint64_t exhaustive_cost(std::uint32_t q, std::size_t k, std::size_t n);

MinWeightResult min_weight_exhaustive(const FiniteField& f, const Matrix& g, const EngineOptions& opt = {});
MinWeightResult min_weight_bz(const FiniteField& f, const Matrix& g, const EngineOptions& opt = {});
// The toric versions also exploit translations by the torus, which permute
// coordinates and preserve the code.
MinWeightResult min_weight_exhaustive(const ToricCode& c, const EngineOptions& opt = {});
MinWeightResult min_weight_bz(const ToricCode& c, const EngineOptions& opt = {});

enum class Engine { Auto, Exhaustive, BZ };
Engine parse_engine(const std::string& s);

// N_P = n - d
std::uint64_t max_zero_count(const geom::LatticePolytope& p, std::uint32_t q, Engine engine = Engine::Auto,
                             const EngineOptions& opt = {});

struct CodeParams {
  std::size_t n = 0, k = 0;
  std::uint64_t d = 0, n_p = 0;
  std::int64_t griesmer_d = 0, gv_d = 0;
  bool injective = false;
  Engine engine = Engine::Auto;  // the one actually used
  MinWeightResult search;
  std::vector<std::string> warnings;
  std::vector<bounds::BoundReport> bound_reports;
};

CodeParams params_report(const geom::LatticePolytope& p, std::uint32_t q, Engine engine = Engine::Auto,
                         const EngineOptions& opt = {});

}  // namespace toric3::codes
