// Copyright 2026 The ptgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTGRID_PROSPECT_H_
#define PTGRID_PROSPECT_H_

// Prospect-theory primitives: Prelec probability weighting, reference-point
// value framing, and subjective evaluation of finite prospects.
//
// All types are immutable after construction and validate their invariants
// in the constructor (std::domain_error / std::invalid_argument).

#include <string>
#include <vector>

namespace ptgrid::pt {

// Canonical behavioral calibration used wherever parameters are not given.
inline constexpr double kDefaultAlpha = 0.65;
inline constexpr double kDefaultGamma = 2.25;
inline constexpr double kDefaultBeta = 0.88;

struct Outcome {
  double value = 0.0;
  double probability = 0.0;
};

class Prospect {
 public:
  // Requires a non-empty list, probabilities in [0,1] summing to 1 (1e-9).
  explicit Prospect(std::vector<Outcome> outcomes);

  static Prospect certain(double value) { return Prospect({{value, 1.0}}); }

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  double expected_value() const;

 private:
  std::vector<Outcome> outcomes_;
};

// One-parameter Prelec function w(p) = exp(-(-ln p)^alpha), alpha in (0,1].
class PrelecWeighting {
 public:
  explicit PrelecWeighting(double alpha = 1.0);

  double alpha() const { return alpha_; }
  bool is_rational() const { return alpha_ == 1.0; }
  double operator()(double p) const;
  double inverse(double w) const;

 private:
  double alpha_;
};

// Kahneman-Tversky power value function around a reference point.
struct ValueFrame {
  double reference = 0.0;
  double gamma = 1.0;      // loss aversion, >= 1
  double beta_gain = 1.0;  // curvature in gains, (0,1]
  double beta_loss = 1.0;  // curvature in losses, (0,1]

  static ValueFrame identity() { return {}; }
  static ValueFrame kahneman_tversky(double reference = 0.0) {
    return {reference, kDefaultGamma, kDefaultBeta, kDefaultBeta};
  }

  // Throws std::invalid_argument on violated invariants.
  void validate() const;
  bool is_identity() const {
    return reference == 0.0 && gamma == 1.0 && beta_gain == 1.0 &&
           beta_loss == 1.0;
  }
};

struct PtProfile {
  PrelecWeighting weighting;
  ValueFrame frame;

  PtProfile() = default;
  PtProfile(PrelecWeighting w, ValueFrame f);

  static PtProfile eut() { return {}; }
  static PtProfile weighting_only(double alpha) {
    return {PrelecWeighting(alpha), ValueFrame::identity()};
  }
  static PtProfile kahneman_tversky(double reference = 0.0) {
    return {PrelecWeighting(kDefaultAlpha),
            ValueFrame::kahneman_tversky(reference)};
  }

  bool is_eut() const { return weighting.is_rational() && frame.is_identity(); }
};

// w(0) = 0 and w(1) = 1 by continuous extension. Throws std::domain_error for
// p outside [0,1] or alpha outside (0,1].
double prelec_weight(double p, double alpha);

// p = exp(-(-ln w)^(1/alpha)); same domain rules as prelec_weight.
double prelec_inverse(double w, double alpha);

// x = u - reference; x^beta_gain for x >= 0, -gamma * (-x)^beta_loss otherwise.
double frame_value(double u, const ValueFrame& frame);

// sum_i w(p_i) * v(u_i). Decision weights are not renormalized.
double evaluate_prospect(const Prospect& prospect, const PtProfile& profile);

// The four bill-framing options of the gain/loss letter example: a) 50% of a
// $100 credit, b) a certain $50 credit, c) 50% of a $100 bill, d) a certain
// $50 bill. All four are coded relative to the profile's reference point.
struct OptionValues {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

enum class Preference { kFirst, kSecond, kIndifferent };

struct PreferenceReport {
  PtProfile profile;
  OptionValues pt;
  OptionValues eut;
  Preference pt_gain_pair;   // a vs b
  Preference pt_loss_pair;   // c vs d
  Preference eut_gain_pair;
  Preference eut_loss_pair;

  // b preferred to a and c preferred to d, while EUT is indifferent in both.
  bool reversal() const;
  std::string to_text() const;
};

Prospect option_prospect(char option);
PreferenceReport preference_demo(const PtProfile& profile);

}  // namespace ptgrid::pt

#endif  // PTGRID_PROSPECT_H_
