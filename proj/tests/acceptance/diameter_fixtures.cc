// Copyright 2026 The flipdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes "n diameter" for n = 2..8 using the edge-set oracle.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "support/oracle.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: diameter_fixtures OUTPUT\n";
    return 2;
  }
  std::ofstream out(argv[1]);
  for (int n = 2; n <= 8; ++n) out << n << " " << flipdist::oracle::diameter(n) << "\n";
  return out ? 0 : 1;
}
