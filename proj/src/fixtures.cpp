#include "tourlab/fixtures.hpp"

#include <stdexcept>

namespace tourlab {

namespace {

Tour tour_from_one_based(std::initializer_list<int> seq) {
    Tour t;
    t.order.reserve(seq.size());
    for (int v : seq) t.order.push_back(v - 1);
    return t;
}

}  // namespace

PairFixture pair12() {
    PairFixture fx;
    fx.instance.id = "pair12";
    fx.instance.points = {
        {11, 12}, {9, 3},  {0, 7},  {11, 4}, {5, 13},  {3, 15},
        {4, 12},  {11, 2}, {6, 9},  {10, 5}, {12, 14}, {14, 13},
    };
    fx.t = tour_from_one_based({1, 11, 12, 10, 4, 8, 2, 9, 3, 7, 6, 5});
    fx.s = tour_from_one_based({1, 4, 8, 2, 10, 3, 7, 6, 5, 9, 11, 12});
    fx.t_certified_optimal = true;
    return fx;
}

PairFixture pair42() {
    PairFixture fx;
    fx.instance.id = "pair42";
    fx.instance.points = {
        {32, 5},  {18, 18}, {27, 1},  {15, 1},  {23, 13}, {40, 13}, {34, 1},
        {15, 11}, {11, 3},  {32, 11}, {35, 19}, {5, 10},  {21, 3},  {29, 19},
        {25, 7},  {40, 7},  {36, 15}, {10, 16}, {1, 20},  {32, 16}, {9, 7},
        {28, 14}, {36, 6},  {2, 5},   {7, 1},   {40, 1},  {1, 14},  {9, 20},
        {20, 10}, {17, 6},  {6, 15},  {14, 15}, {22, 20}, {29, 8},  {1, 9},
        {40, 20}, {9, 12},  {14, 20}, {37, 10}, {1, 1},   {19, 14}, {5, 19},
    };
    fx.t = tour_from_one_based({26, 16, 23, 39, 6,  17, 36, 11, 20, 10, 22, 14, 33, 2,
                                41, 5,  29, 8,  32, 38, 28, 42, 19, 27, 31, 18, 37, 21,
                                12, 35, 24, 40, 25, 9,  4,  30, 13, 3,  15, 34, 1,  7});
    fx.s = tour_from_one_based({26, 23, 16, 6,  36, 11, 14, 20, 17, 39, 10, 1,  34, 22,
                                5,  15, 29, 30, 8,  32, 41, 33, 2,  38, 18, 28, 42, 19,
                                31, 37, 12, 27, 35, 24, 40, 25, 21, 9,  4,  13, 3,  7});
    fx.t_certified_optimal = false;
    return fx;
}

PairFixture fixture_by_name(const std::string& name) {
    if (name == "pair12") return pair12();
    if (name == "pair42") return pair42();
    throw std::invalid_argument("unknown fixture '" + name + "' (expected pair12 or pair42)");
}

}  // namespace tourlab
