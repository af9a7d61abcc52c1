#pragma once

#include <string>
#include <utility>
#include <vector>

namespace decor::test {

using StringMatrix = std::vector<std::vector<std::string>>;

// Inverse node matrices, frozen: the worked 3x3 case and the published
// tables for twice-spin 3..6.
inline const StringMatrix kInv1 = {
    {"0", "1", "0"},
    {"-1/2", "0", "1/2"},
    {"1/2", "-1", "1/2"},
};

inline const StringMatrix kInv3Half = {
    {"-1/16", "9/16", "9/16", "-1/16"},
    {"1/24", "-9/8", "9/8", "-1/24"},
    {"1/4", "-1/4", "-1/4", "1/4"},
    {"-1/6", "1/2", "-1/2", "1/6"},
};

inline const StringMatrix kInv2 = {
    {"0", "0", "1", "0", "0"},
    {"1/12", "-2/3", "0", "2/3", "-1/12"},
    {"-1/24", "2/3", "-5/4", "2/3", "-1/24"},
    {"-1/12", "1/6", "0", "-1/6", "1/12"},
    {"1/24", "-1/6", "1/4", "-1/6", "1/24"},
};

inline const StringMatrix kInv5Half = {
    {"3/256", "-25/256", "75/128", "75/128", "-25/256", "3/256"},
    {"-3/640", "25/384", "-75/64", "75/64", "-25/384", "3/640"},
    {"-5/96", "13/32", "-17/48", "-17/48", "13/32", "-5/96"},
    {"1/48", "-13/48", "17/24", "-17/24", "13/48", "-1/48"},
    {"1/48", "-1/16", "1/24", "1/24", "-1/16", "1/48"},
    {"-1/120", "1/24", "-1/12", "1/12", "-1/24", "1/120"},
};

inline const StringMatrix kInv3 = {
    {"0", "0", "0", "1", "0", "0", "0"},
    {"-1/60", "3/20", "-3/4", "0", "3/4", "-3/20", "1/60"},
    {"1/180", "-3/40", "3/4", "-49/36", "3/4", "-3/40", "1/180"},
    {"1/48", "-1/6", "13/48", "0", "-13/48", "1/6", "-1/48"},
    {"-1/144", "1/12", "-13/48", "7/18", "-13/48", "1/12", "-1/144"},
    {"-1/240", "1/60", "-1/48", "0", "1/48", "-1/60", "1/240"},
    {"1/720", "-1/120", "1/48", "-1/36", "1/48", "-1/120", "1/720"},
};

// The 9x9 two-leg spin-1 node matrix, row order (-1,-1), (-1,0), ..., (1,1).
inline const StringMatrix kV11 = {
    {"1", "-1", "1", "-1", "1", "-1", "1", "-1", "1"},
    {"1", "0", "0", "-1", "0", "0", "1", "0", "0"},
    {"1", "1", "1", "-1", "-1", "-1", "1", "1", "1"},
    {"1", "-1", "1", "0", "0", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1", "0", "0", "0", "0", "0", "0"},
    {"1", "-1", "1", "1", "-1", "1", "1", "-1", "1"},
    {"1", "0", "0", "1", "0", "0", "1", "0", "0"},
    {"1", "1", "1", "1", "1", "1", "1", "1", "1"},
};

inline const std::vector<std::pair<int, const StringMatrix*>> kInverseFixtures = {
    {2, &kInv1}, {3, &kInv3Half}, {4, &kInv2}, {5, &kInv5Half}, {6, &kInv3}};

}  // namespace decor::test
