// Copyright 2026 The robcert Authors
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

// Certifies a matrix read from a file (or a built-in example), prints the
// certificate, and checks it independently.

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "robcert/robcert.hpp"

int main(int argc, char** argv) {
  using namespace robcert;

  SymMatrix a;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 2;
    }
    a = read_matrix(in);
  } else {
    a = SymMatrix::from_rows({{0, Rational(3, 2), 1, 0},
                              {Rational(3, 2), 0, 2, 1},
                              {1, 2, 0, 2},
                              {0, 1, 2, 0}});
  }

  const Certificate c = certify(a);
  std::cout << certificate_text(c);
  std::cout << "verified: " << std::boolalpha << verify_certificate(a, c) << '\n';

  if (!is_robinsonian(c)) {
    std::cout << "all weighted asteroidal triples: " << enumerate_wat_triples(a).size() << '\n';
    const Subset core = greedy_robinsonian_core(a);
    std::cout << "heuristic Robinsonian core:";
    for (Label x : core) std::cout << ' ' << x;
    std::cout << '\n';
  }

  const Graph net = gen::net_graph();
  const auto verdict = is_unit_interval(net);
  std::cout << "net is unit interval: " << std::holds_alternative<RobinsonOrdering>(verdict) << '\n';
  return 0;
}
