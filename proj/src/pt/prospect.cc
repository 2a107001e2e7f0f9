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

#include "ptgrid/prospect.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ptgrid::pt {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("Prelec alpha must lie in (0,1], got " +
                            std::to_string(alpha));
  }
}

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0,1], got " +
                            std::to_string(x));
  }
}

Preference compare(double first, double second) {
  const double tol = 1e-12 * std::max({1.0, std::abs(first), std::abs(second)});
  if (first > second + tol) return Preference::kFirst;
  if (second > first + tol) return Preference::kSecond;
  return Preference::kIndifferent;
}

const char* describe(Preference p, const char* first, const char* second) {
  switch (p) {
    case Preference::kFirst:
      return first;
    case Preference::kSecond:
      return second;
    case Preference::kIndifferent:
      break;
  }
  return "indifferent";
}

}  // namespace

Prospect::Prospect(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw std::invalid_argument("empty prospect");
  double total = 0.0;
  for (const Outcome& o : outcomes_) {
    check_unit(o.probability, "outcome probability");
    if (!std::isfinite(o.value)) {
      throw std::domain_error("prospect outcome value is not finite");
    }
    total += o.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("prospect probabilities sum to " +
                                std::to_string(total));
  }
}

double Prospect::expected_value() const {
  double ev = 0.0;
  for (const Outcome& o : outcomes_) ev += o.probability * o.value;
  return ev;
}

PrelecWeighting::PrelecWeighting(double alpha) : alpha_(alpha) {
  check_alpha(alpha);
}

double PrelecWeighting::operator()(double p) const {
  return prelec_weight(p, alpha_);
}

double PrelecWeighting::inverse(double w) const {
  return prelec_inverse(w, alpha_);
}

void ValueFrame::validate() const {
  if (!std::isfinite(reference)) {
    throw std::invalid_argument("reference point must be finite");
  }
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("loss aversion gamma must be >= 1");
  }
  if (!(beta_gain > 0.0 && beta_gain <= 1.0) ||
      !(beta_loss > 0.0 && beta_loss <= 1.0)) {
    throw std::invalid_argument("curvature exponents must lie in (0,1]");
  }
}

PtProfile::PtProfile(PrelecWeighting w, ValueFrame f)
    : weighting(w), frame(f) {
  frame.validate();
}

double prelec_weight(double p, double alpha) {
  check_unit(p, "probability");
  check_alpha(alpha);
  if (p == 0.0 || p == 1.0 || alpha == 1.0) return p;
  return std::exp(-std::pow(-std::log(p), alpha));
}

double prelec_inverse(double w, double alpha) {
  check_unit(w, "decision weight");
  check_alpha(alpha);
  if (w == 0.0 || w == 1.0 || alpha == 1.0) return w;
  return std::exp(-std::pow(-std::log(w), 1.0 / alpha));
}

double frame_value(double u, const ValueFrame& frame) {
  if (!std::isfinite(u)) throw std::domain_error("non-finite utility");
  const double x = u - frame.reference;
  if (x >= 0.0) {
    return frame.beta_gain == 1.0 ? x : std::pow(x, frame.beta_gain);
  }
  const double loss = frame.beta_loss == 1.0 ? -x : std::pow(-x, frame.beta_loss);
  return -frame.gamma * loss;
}

double evaluate_prospect(const Prospect& prospect, const PtProfile& profile) {
  double total = 0.0;
  for (const Outcome& o : prospect.outcomes()) {
    total += profile.weighting(o.probability) * frame_value(o.value, profile.frame);
  }
  return total;
}

Prospect option_prospect(char option) {
  switch (option) {
    case 'a':
      return Prospect({{100.0, 0.5}, {0.0, 0.5}});
    case 'b':
      return Prospect::certain(50.0);
    case 'c':
      return Prospect({{-100.0, 0.5}, {0.0, 0.5}});
    case 'd':
      return Prospect::certain(-50.0);
    default:
      throw std::invalid_argument(std::string("unknown option '") + option + "'");
  }
}

PreferenceReport preference_demo(const PtProfile& profile) {
  const PtProfile eut = PtProfile::eut();
  auto values = [](const PtProfile& pr) {
    return OptionValues{evaluate_prospect(option_prospect('a'), pr),
                        evaluate_prospect(option_prospect('b'), pr),
                        evaluate_prospect(option_prospect('c'), pr),
                        evaluate_prospect(option_prospect('d'), pr)};
  };
  PreferenceReport r{profile,
                     values(profile),
                     values(eut),
                     Preference::kIndifferent,
                     Preference::kIndifferent,
                     Preference::kIndifferent,
                     Preference::kIndifferent};
  r.pt_gain_pair = compare(r.pt.a, r.pt.b);
  r.pt_loss_pair = compare(r.pt.c, r.pt.d);
  r.eut_gain_pair = compare(r.eut.a, r.eut.b);
  r.eut_loss_pair = compare(r.eut.c, r.eut.d);
  return r;
}

bool PreferenceReport::reversal() const {
  return pt_gain_pair == Preference::kSecond &&
         pt_loss_pair == Preference::kFirst &&
         eut_gain_pair == Preference::kIndifferent &&
         eut_loss_pair == Preference::kIndifferent;
}

std::string PreferenceReport::to_text() const {
  // Shortest text that parses back to the same double.
  auto num = [](double v) {
    char buf[32];
    return std::string(buf, std::to_chars(buf, buf + sizeof buf, v).ptr);
  };
  std::ostringstream out;
  out << "profile alpha=" << num(profile.weighting.alpha())
      << " reference=" << num(profile.frame.reference)
      << " gamma=" << num(profile.frame.gamma)
      << " beta_gain=" << num(profile.frame.beta_gain)
      << " beta_loss=" << num(profile.frame.beta_loss) << "\n";
  auto block = [&out, &num](const char* label, const OptionValues& v,
                            Preference g, Preference l) {
    out << label << " value(a)=" << num(v.a) << " value(b)=" << num(v.b)
        << " value(c)=" << num(v.c) << " value(d)=" << num(v.d) << "\n";
    out << label << " gain pair: " << describe(g, "a over b", "b over a")
        << "\n";
    out << label << " loss pair: " << describe(l, "c over d", "d over c")
        << "\n";
  };
  block("PT", pt, pt_gain_pair, pt_loss_pair);
  block("EUT", eut, eut_gain_pair, eut_loss_pair);
  out << "reversal: " << (reversal() ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace ptgrid::pt
