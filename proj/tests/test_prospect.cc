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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptgrid/prospect.h"

namespace ptgrid::pt {
namespace {

// Reference values computed with 50-digit arithmetic.
TEST(Prelec, MatchesHighPrecisionOracle) {
  EXPECT_NEAR(prelec_weight(0.1, 0.5), 0.2192753288600209, 1e-15);
  EXPECT_NEAR(prelec_weight(0.5, 0.5), 0.434936771575709924, 1e-15);
  EXPECT_NEAR(prelec_inverse(0.2192, 0.5), 0.0998957666, 1e-10);
}

TEST(Prelec, Endpoints) {
  for (double a : {0.1, 0.5, 0.65, 1.0}) {
    EXPECT_EQ(prelec_weight(0.0, a), 0.0);
    EXPECT_EQ(prelec_weight(1.0, a), 1.0);
    EXPECT_EQ(prelec_inverse(0.0, a), 0.0);
    EXPECT_EQ(prelec_inverse(1.0, a), 1.0);
  }
}

TEST(Prelec, AlphaOneIsIdentityBitForBit) {
  for (double p = 0.0; p <= 1.0; p += 0.0625) EXPECT_EQ(prelec_weight(p, 1.0), p);
}

TEST(Prelec, FixedPointAtInverseE) {
  const double p = 1.0 / std::numbers::e;
  for (int k = 1; k <= 10; ++k) EXPECT_NEAR(prelec_weight(p, k / 10.0), p, 1e-12);
}

TEST(Prelec, StrictlyIncreasing) {
  for (double a : {0.2, 0.65, 0.9}) {
    double prev = 0.0;
    for (int k = 1; k <= 1000; ++k) {
      const double w = prelec_weight(k / 1000.0, a);
      EXPECT_GT(w, prev);
      prev = w;
    }
  }
}

TEST(Prelec, InverseRoundTrip) {
  for (double a : {0.05, 0.3, 0.65, 1.0}) {
    for (int k = 1; k < 100; ++k) {
      const double p = k / 100.0;
      EXPECT_NEAR(prelec_inverse(prelec_weight(p, a), a), p, 1e-9);
    }
  }
}

TEST(Prelec, RejectsOutOfDomain) {
  EXPECT_THROW(prelec_weight(-0.1, 0.5), std::domain_error);
  EXPECT_THROW(prelec_weight(1.1, 0.5), std::domain_error);
  EXPECT_THROW(prelec_weight(0.5, 0.0), std::domain_error);
  EXPECT_THROW(prelec_weight(0.5, 1.5), std::domain_error);
  EXPECT_THROW(PrelecWeighting(std::nan("")), std::domain_error);
}

TEST(ValueFrame, PowerFormAroundReference) {
  const ValueFrame f{0.0, 2.0, 1.0, 0.5};
  EXPECT_DOUBLE_EQ(frame_value(-4.0, f), -4.0);
  EXPECT_DOUBLE_EQ(frame_value(3.0, f), 3.0);
  EXPECT_EQ(frame_value(0.0, f), 0.0);
  const ValueFrame shifted{10.0, 1.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(frame_value(7.0, shifted), -3.0);
}

TEST(ValueFrame, IdentityReturnsInput) {
  for (double u : {-123.5, -1e-9, 0.0, 2.5, 1e6}) {
    EXPECT_EQ(frame_value(u, ValueFrame::identity()), u);
  }
}

TEST(ValueFrame, LossesLoomLarger) {
  const ValueFrame kt = ValueFrame::kahneman_tversky();
  for (double x : {0.5, 1.0, 10.0, 100.0}) {
    EXPECT_GT(-frame_value(-x, kt), frame_value(x, kt));
  }
}

TEST(ValueFrame, Validation) {
  EXPECT_THROW((ValueFrame{0.0, 0.5, 1.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ValueFrame{0.0, 1.0, 0.0, 1.0}.validate()), std::invalid_argument);
  EXPECT_THROW((ValueFrame{0.0, 1.0, 1.0, 1.2}.validate()), std::invalid_argument);
  EXPECT_NO_THROW(ValueFrame::kahneman_tversky(3.0).validate());
}

TEST(Prospect, Validation) {
  EXPECT_THROW(Prospect({}), std::invalid_argument);
  EXPECT_THROW(Prospect({{1.0, 0.5}, {2.0, 0.4}}), std::invalid_argument);
  EXPECT_THROW(Prospect({{1.0, -0.5}, {2.0, 1.5}}), std::domain_error);
  EXPECT_DOUBLE_EQ(Prospect({{10.0, 0.25}, {-2.0, 0.75}}).expected_value(), 1.0);
}

TEST(Prospect, KahnemanTverskyOracle) {
  const PtProfile kt = PtProfile::kahneman_tversky();
  EXPECT_NEAR(evaluate_prospect(option_prospect('a'), kt), 26.1678358251637953, 1e-10);
  EXPECT_NEAR(evaluate_prospect(option_prospect('b'), kt), 31.2675320597049362, 1e-10);
  EXPECT_NEAR(evaluate_prospect(option_prospect('c'), kt), -58.8776306066185394, 1e-10);
  EXPECT_NEAR(evaluate_prospect(option_prospect('d'), kt), -70.3519471343361065, 1e-10);
}

TEST(Prospect, EutProfileGivesExpectedValue) {
  const Prospect p({{3.0, 0.2}, {-1.0, 0.3}, {7.5, 0.5}});
  EXPECT_NEAR(evaluate_prospect(p, PtProfile::eut()), p.expected_value(), 1e-14);
}

TEST(PreferenceDemo, ReversalUnderDefaults) {
  const PreferenceReport r = preference_demo(PtProfile::kahneman_tversky());
  EXPECT_EQ(r.pt_gain_pair, Preference::kSecond);
  EXPECT_EQ(r.pt_loss_pair, Preference::kFirst);
  EXPECT_EQ(r.eut_gain_pair, Preference::kIndifferent);
  EXPECT_EQ(r.eut_loss_pair, Preference::kIndifferent);
  EXPECT_TRUE(r.reversal());
  EXPECT_NE(r.to_text().find("reversal: yes"), std::string::npos);
}

TEST(PreferenceDemo, EutProfileIsIndifferent) {
  const PreferenceReport r = preference_demo(PtProfile::eut());
  EXPECT_EQ(r.pt_gain_pair, Preference::kIndifferent);
  EXPECT_EQ(r.pt_loss_pair, Preference::kIndifferent);
  EXPECT_FALSE(r.reversal());
}

}  // namespace
}  // namespace ptgrid::pt
