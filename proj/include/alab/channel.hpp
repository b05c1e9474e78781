#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alab {

// Finite discrete memoryless observation channel. Row l is the outcome
// distribution f_l observed when the queried label is l.
struct Channel {
  int num_labels = 0;
  int num_outcomes = 0;
  std::vector<double> likelihood;  // row-major, num_labels x num_outcomes

  double at(int label, int outcome) const {
    return likelihood[static_cast<std::size_t>(label) * num_outcomes + outcome];
  }
  std::span<const double> row(int label) const {
    return {likelihood.data() + static_cast<std::size_t>(label) * num_outcomes,
            static_cast<std::size_t>(num_outcomes)};
  }

  // True when every entry is positive, which is what makes all the
  // information constants below finite.
  bool strictly_positive() const;
};

// Validates and builds a channel. Rows must sum to 1 within 1e-12; entries
// within 1e-15 of zero are clipped to exactly zero; rows are never
// renormalized behind the caller's back.
Channel make_channel(int num_labels, int num_outcomes, std::vector<double> likelihood);
Channel make_channel(const std::vector<std::vector<double>>& rows);

// Binary symmetric channel with crossover probability p. Labels and
// outcomes are ordered (-1, +1); index 0 is -1 and index 1 is +1.
Channel bsc(double p);

// KL divergence in bits with the conventions 0*log(a/0) = 0 and
// b*log(b/0) = +inf for b > 0. Throws std::invalid_argument on mismatched
// lengths.
double kl_divergence(std::span<const double> p, std::span<const double> q);

struct CapacityResult {
  double bits = 0.0;
  std::vector<double> input;  // capacity-achieving input distribution
};

// Shannon capacity of the channel by alternating maximization, with the
// capacity-achieving input distribution. Stops once successive capacity
// estimates differ by less than 1e-10 and the upper/lower estimate gap is
// below 1e-10; throws ConvergenceError if the sweep budget runs out.
CapacityResult shannon_capacity(const Channel& ch);

// Largest pairwise divergence max_{k,l} D(f_k || f_l); +inf when some row
// has a zero where another row is positive.
double c1(const Channel& ch);

// Largest likelihood ratio max_{k,l} max_y f_k(y)/f_l(y); +inf when a zero
// entry sits under a positive one. Always >= 1.
double c2(const Channel& ch);

// Capacity of the two-row subchannel on labels (l, l2). Symmetric in its
// arguments; throws std::invalid_argument when l == l2.
double pairwise_capacity(const Channel& ch, int l, int l2);

// min over ordered label pairs of min{ C_{ll'}, D(f_l' || (f_l + f_l')/2) }.
double c_min(const Channel& ch);

// All information constants of a channel in one bundle.
struct ChannelConstants {
  double capacity = 0.0;
  std::vector<double> capacity_input;
  double c1 = 0.0;
  double c2 = 1.0;
  int num_labels = 0;
  std::vector<double> pairwise;  // num_labels x num_labels, diagonal 0
  double c_min = 0.0;

  double pairwise_at(int l, int l2) const {
    return pairwise[static_cast<std::size_t>(l) * num_labels + l2];
  }
};

ChannelConstants compute_constants(const Channel& ch);

// Which of the three standing assumptions the channel satisfies. These are
// preconditions for the closed-form query bounds; simulation itself only
// needs a valid channel.
struct AssumptionReport {
  bool positive_capacity = false;  // C > 0: some pair of rows differs
  bool finite_c1 = false;          // C1 < inf
  bool finite_c2 = false;          // C2 < inf
  bool all_hold() const { return positive_capacity && finite_c1 && finite_c2; }
  std::string violation_message() const;
};

AssumptionReport check_assumptions(const Channel& ch);

// Plain-text serialization: header "labels K outcomes N" followed by K
// rows of N probabilities.
std::string format_channel(const Channel& ch);
Channel parse_channel(std::istream& in);
Channel parse_channel_text(const std::string& text);

// A channel given on the command line: either the shorthand "bsc:p=0.2" or
// a path to a serialized channel file.
struct ChannelSpec {
  Channel channel;
  std::optional<double> bsc_p;  // set when the spec was a BSC shorthand
  std::string tag;              // echo of the original spec string
};

ChannelSpec parse_channel_spec(const std::string& spec);

}  // namespace alab
