#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alab {

// A finite class of M labeling functions, stored over its effective sample
// partition: each column is a distinct vector of per-function labels, and
// any two raw samples inducing the same column have been merged. Columns
// are the unit of query everywhere in this library.
//
// Binary classes encode -1/+1 as label indices 0/1.
struct FunctionClass {
  int num_functions = 0;  // M
  int num_labels = 0;     // |L|
  std::vector<int> labels;  // column-major: column x occupies [x*M, (x+1)*M)
  std::vector<std::string> column_ids;  // provenance of each merged column

  int num_columns() const { return static_cast<int>(column_ids.size()); }
  int label(int fn, int col) const {
    return labels[static_cast<std::size_t>(col) * num_functions + fn];
  }
  std::span<const int> column(int col) const {
    return {labels.data() + static_cast<std::size_t>(col) * num_functions,
            static_cast<std::size_t>(num_functions)};
  }
  bool binary() const { return num_labels == 2; }
};

// Builds a class from per-column label vectors, merging duplicate columns
// (first occurrence wins, along with its id) and validating that all
// functions are distinct.
FunctionClass make_function_class(int num_labels,
                                  const std::vector<std::vector<int>>& columns,
                                  std::vector<std::string> ids = {});

// Binary class over columns e_1..e_M, where e_i labels function i with +1
// and every other function with -1.
FunctionClass make_disjoint(int m);

// Binary class over columns u_0..u_M, where u_i labels the first i
// functions with -1 and the rest with +1. u_0 (all +1) and u_M (all -1)
// are the cells outside the leftmost/rightmost threshold and both belong
// to the class; dropping u_0 would leave function 1 constant and break the
// class's balance properties (c* = 0, 1-neighborliness).
FunctionClass make_threshold(int m);

// Class whose columns are every non-constant label vector in L^M, i.e.
// |A| = |L|^M - |L|. Guarded by num_labels^m <= 2^20.
FunctionClass make_sample_rich(int m, int num_labels);

// The per-label partition {H_l^x} of function indices at column x.
std::vector<std::vector<int>> column_partition(const FunctionClass& fc, int x);

// A class is 1-neighborly when every function h_i admits a column pair on
// which h_i flips while every other function is constant, except that the
// exact pointwise complement of h_i (when it is in the class) is exempt.
bool check_one_neighborly(const FunctionClass& fc);

struct LocalIdWitness {
  int x = -1;
  int x_other = -1;
  int label = -1;
  int label_other = -1;
  int condition = 0;  // 1 or 2
};

struct LocalIdResult {
  bool ok = false;
  // One witness per function when ok; std::nullopt marks the functions
  // that could not be isolated.
  std::vector<std::optional<LocalIdWitness>> witnesses;
};

// Local identifiability: every function can be isolated by a pair of
// columns and a pair of labels, either by flipping against a background of
// agreeing/swapped functions (condition 1) or by being the unique function
// that agrees on both columns with a given label while only two labels
// appear at all (condition 2). The two columns of a witness may coincide:
// distinct raw samples can share an effective column.
LocalIdResult check_locally_identifiable(const FunctionClass& fc);

// Minimax coherence of a binary class: the smallest achievable worst-case
// absolute column-average of labels over distributions on columns,
//   min_{P} max_h | sum_x h(x) P(x) |,
// solved as a linear program by the in-repo dense simplex. Always in [0,1].
double c_star(const FunctionClass& fc);

// Worst-case number of noiseless generalized-binary-search queries to pin
// down the true function: the searcher repeatedly queries the column that
// minimizes the largest label-induced cell of the current version space
// (lowest column index on ties).
int n0(const FunctionClass& fc);

// True when the columns are exactly all non-constant label vectors.
bool is_sample_rich(const FunctionClass& fc);

struct ClassReport {
  bool one_neighborly = false;
  bool locally_identifiable = false;
  bool sample_rich = false;
  std::optional<double> c_star;  // binary classes only
  int n0 = 0;
};

ClassReport make_class_report(const FunctionClass& fc);

// Plain-text serialization: header "functions M labels K columns A"
// followed by M rows of A label indices.
std::string format_function_class(const FunctionClass& fc);
FunctionClass parse_function_class(std::istream& in);
FunctionClass parse_function_class_text(const std::string& text);

struct ClassSpec {
  FunctionClass fc;
  std::string tag;                 // echo of the original spec string
  std::string kind;                // disjoint/threshold/rich/file
  int m = 0;
  int labels = 2;
};

// "disjoint:m=5", "threshold:m=5", "rich:m=5,labels=2", or a file path.
ClassSpec parse_class_spec(const std::string& spec);

}  // namespace alab
