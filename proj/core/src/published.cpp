// Copyright 2026 The ffwiener Authors
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

#include "ffw/published.hpp"

namespace ffw::published {

namespace {

const GaussianRational kI = GaussianRational::i();

GaussianRational gi(int re, int im) { return {ExactRational(re), ExactRational(im)}; }

}  // namespace

ScaledCylinderPolynomial from_printed(std::size_t dimension, const std::vector<PrintedTerm>& terms) {
  ScaledCylinderPolynomial out(dimension);
  for (const auto& t : terms) {
    out.add_term({MultiIndex(t.v), t.q_power}, t.coefficient / kI.pow(t.q_power));
  }
  return out;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {1, "<a1,x>^2", "<a1,y>^2 + i/q",
       from_printed(1, {{{2}, 0, 1}, {{0}, 1, gi(0, 1)}})},
      {2, "<a1,x>^4", "<a1,y>^4 + 6i/q <a1,y>^2 - 3/q^2",
       from_printed(1, {{{4}, 0, 1}, {{2}, 1, gi(0, 6)}, {{0}, 2, -3}})},
      {3, "<a1,x>^6", "<a1,y>^6 + 15i/q <a1,y>^4 - 45/q^2 <a1,y>^2 - 15i/q^3",
       from_printed(1, {{{6}, 0, 1}, {{4}, 1, gi(0, 15)}, {{2}, 2, -45}, {{0}, 3, gi(0, -15)}})},
      // The printed functional reads <a1,x>^4 although the transform has degree 8.
      {4, "<a1,x>^4",
       "<a1,y>^8 + 28i/q <a1,y>^6 - 210/q^2 <a1,y>^4 - 320i/q^3 <a1,y>^2 + 105/q^4",
       from_printed(1, {{{8}, 0, 1},
                        {{6}, 1, gi(0, 28)},
                        {{4}, 2, -210},
                        {{2}, 3, gi(0, -320)},
                        {{0}, 4, 105}})},
  };
  return rows;
}

const std::vector<Example>& examples() {
  static const std::vector<Example> list = {
      {"F5",
       MultiIndex{2, 4},
       {1, 2},
       "[<a1,y>^2 + i/q][<a2,y>^4 + 6i/q <a2,y>^2 - 3/q^2]",
       {from_printed(2, {{{2, 0}, 0, 1}, {{0, 0}, 1, gi(0, 1)}}),
        from_printed(2, {{{0, 4}, 0, 1}, {{0, 2}, 1, gi(0, 6)}, {{0, 0}, 2, -3}})}},
      {"F6",
       MultiIndex{4, 2, 6},
       {2, 1, 3},
       "[<a1,y>^4 + 6i/q <a1,y>^2 - 3/q^2][<a2,y>^2 + i/q]"
       "[<a3,y>^6 + 15i/q <a3,y>^4 - 45/q^2 <a3,y>^2 - 15i/q^3]",
       {from_printed(3, {{{4, 0, 0}, 0, 1}, {{2, 0, 0}, 1, gi(0, 6)}, {{0, 0, 0}, 2, -3}}),
        from_printed(3, {{{0, 2, 0}, 0, 1}, {{0, 0, 0}, 1, gi(0, 1)}}),
        from_printed(3, {{{0, 0, 6}, 0, 1},
                         {{0, 0, 4}, 1, gi(0, 15)},
                         {{0, 0, 2}, 2, -45},
                         {{0, 0, 0}, 3, gi(0, -15)}})}},
      // Printed with p4 = 3 and a <a1,y>^2 inside the <a4,y> factor.
      {"F7",
       MultiIndex{4, 0, 2, 4},
       {2, 0, 1, 3},
       "[<a1,y>^4 + 6i/q <a1,y>^2 - 3/q^2][<a3,y>^2 + i/q][<a4,y>^4 + 6i/q <a1,y>^2 - 3/q^2]",
       {from_printed(4, {{{4, 0, 0, 0}, 0, 1}, {{2, 0, 0, 0}, 1, gi(0, 6)}, {{0, 0, 0, 0}, 2, -3}}),
        from_printed(4, {{{0, 0, 2, 0}, 0, 1}, {{0, 0, 0, 0}, 1, gi(0, 1)}}),
        from_printed(4, {{{0, 0, 0, 4}, 0, 1}, {{2, 0, 0, 0}, 1, gi(0, 6)}, {{0, 0, 0, 0}, 2, -3}})}},
  };
  return list;
}

}  // namespace ffw::published
