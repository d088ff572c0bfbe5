#ifndef RSCRAM_TESTS_FIXTURES_HPP_
#define RSCRAM_TESTS_FIXTURES_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

// Golden values for the 8-element worked example: the permutation
// sigma = (5,4,6,3,2,7,0,1), its layer words, and the full inter-layer edge
// lists of the resulting 7x8 graph (transcribed from the published figure).
namespace fixtures {

inline const std::vector<std::uint32_t> kSigma{5, 4, 6, 3, 2, 7, 0, 1};

inline const char* kExampleWord = "11100100";
inline const std::vector<std::uint32_t> kExamplePi{4, 5, 6, 0, 1, 7, 2, 3};

inline const std::array<const char*, 3> kBinaryColumns{
    "11100100", "00111100", "10010101"};
inline const std::array<const char*, 3> kTracedColumns{
    "11100100", "11000011", "01011001"};

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// kLayerEdges[m] holds the 16 permutation edges (source col -> target col)
// between rows m and m+1.
inline const std::array<EdgeList, 6> kLayerEdges{{
    // rows 0 -> 1
    {{0, 0}, {0, 4}, {1, 1}, {1, 5}, {2, 2}, {2, 6}, {3, 0}, {3, 4},
     {4, 1}, {4, 5}, {5, 3}, {5, 7}, {6, 2}, {6, 6}, {7, 3}, {7, 7}},
    // rows 1 -> 2
    {{0, 0}, {0, 4}, {1, 1}, {1, 5}, {2, 0}, {2, 4}, {3, 1}, {3, 5},
     {4, 2}, {4, 6}, {5, 3}, {5, 7}, {6, 2}, {6, 6}, {7, 3}, {7, 7}},
    // rows 2 -> 3
    {{0, 0}, {0, 4}, {1, 0}, {1, 4}, {2, 1}, {2, 5}, {3, 1}, {3, 5},
     {4, 2}, {4, 6}, {5, 2}, {5, 6}, {6, 3}, {6, 7}, {7, 3}, {7, 7}},
    // rows 3 -> 4
    {{0, 0}, {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7},
     {4, 0}, {4, 1}, {5, 2}, {5, 3}, {6, 4}, {6, 5}, {7, 6}, {7, 7}},
    // rows 4 -> 5
    {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 4}, {2, 6}, {3, 5}, {3, 7},
     {4, 0}, {4, 2}, {5, 1}, {5, 3}, {6, 4}, {6, 6}, {7, 5}, {7, 7}},
    // rows 5 -> 6
    {{0, 0}, {0, 3}, {1, 1}, {1, 4}, {2, 2}, {2, 6}, {3, 5}, {3, 7},
     {4, 0}, {4, 3}, {5, 1}, {5, 4}, {6, 2}, {6, 6}, {7, 5}, {7, 7}},
}};

}  // namespace fixtures

#endif  // RSCRAM_TESTS_FIXTURES_HPP_
