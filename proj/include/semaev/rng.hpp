/*
   Copyright 2026 the semaev-tools authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEMAEV_RNG_HPP
#define SEMAEV_RNG_HPP

#include <cstdint>

namespace semaev {

// Deterministic splitmix64 generator. All randomized operations in the
// library take one of these explicitly; outputs are identical across
// platforms and runs for the same seed (std::uniform_int_distribution is
// not portable, so bounded sampling is done by rejection here).
class Rng {
   public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
        for (;;) {
            uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    bool flip() { return next() & 1; }

    // Independent child stream; deterministic in (current seed, tag).
    Rng fork(uint64_t tag) const { return Rng(mix(state_, tag)); }

    static uint64_t mix(uint64_t a, uint64_t b) {
        uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    uint64_t state_;
};

}  // namespace semaev

#endif
