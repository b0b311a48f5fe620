#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace entmt::testing {

// Twenty segments, two systems. In each segment one hypothesis splits the
// matched reference words into an uneven pair of chunks (L-4, 4) and the
// other into an even pair; both have length L+1, every chunk has length >= 3
// and a filler token separates the chunks, so 1- to 4-gram match counts and
// the brevity penalty are identical. Human judgments prefer the uneven
// (concentrated) hypothesis. Which system gets it alternates by segment.
struct DiscriminationFixture {
  std::filesystem::path ref;
  std::filesystem::path sys_a;
  std::filesystem::path sys_b;
  std::filesystem::path judgments;
};

inline DiscriminationFixture write_discrimination_fixture(const TempDir& dir, std::size_t segments = 20) {
  std::string ref, a, b, judg = "segment\tjudge\tsystem\trank\n";
  for (std::size_t s = 0; s < segments; ++s) {
    const std::size_t L = 12 + s % 5;
    auto word = [&](std::size_t k) { return "s" + std::to_string(s) + "t" + std::to_string(k); };
    auto hyp_split = [&](std::size_t first) {
      std::string h;
      for (std::size_t k = 0; k < L; ++k) {
        if (k == first) h += "filler" + std::to_string(s) + " ";
        h += word(k) + (k + 1 < L ? " " : "");
      }
      return h;
    };
    for (std::size_t k = 0; k < L; ++k) ref += word(k) + (k + 1 < L ? " " : "\n");
    const std::string uneven = hyp_split(L - 4);
    const std::string even = hyp_split(L / 2);
    const bool a_uneven = s % 2 == 0;
    a += (a_uneven ? uneven : even) + "\n";
    b += (a_uneven ? even : uneven) + "\n";
    judg += std::to_string(s) + "\tj\tA\t" + (a_uneven ? "1" : "2") + "\n";
    judg += std::to_string(s) + "\tj\tB\t" + (a_uneven ? "2" : "1") + "\n";
  }
  return {dir.write("disc_ref.txt", ref), dir.write("disc_a.txt", a), dir.write("disc_b.txt", b),
          dir.write("disc_judgments.tsv", judg)};
}

}  // namespace entmt::testing
