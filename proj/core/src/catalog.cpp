#include "olab/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace olab {

namespace {

// clang-format off
const char* kGkl =
    "00000000" "01011111" "00000000" "01011111" "00000000" "01011111" "00000000" "01011111"
    "00000000" "01011111" "11111111" "01011111" "00000000" "01011111" "11111111" "01011111";
const char* kDas =
    "00000000" "00101111" "00000011" "01011111" "00000000" "00011111" "11001111" "00011111"
    "00000000" "00101111" "11111100" "01011111" "00000000" "00011111" "11111111" "00011111";
const char* kDavis =
    "00000111" "00000000" "00000111" "11111111" "00001111" "00000000" "00001111" "11111111"
    "00001111" "00000000" "00000111" "11111111" "00001111" "00110001" "00001111" "11111111";
const char* kAbk =
    "00000101" "00000000" "01010101" "00000101" "00000101" "00000000" "01010101" "00000101"
    "01010101" "11111111" "01010101" "11111111" "01010101" "11111111" "01010101" "11111111";
const char* kCoe1 =
    "00000001" "00010100" "00110000" "11010111" "00010001" "00001111" "00111001" "01010111"
    "00000101" "10110100" "11111111" "00010111" "11110001" "00111101" "11111001" "01010111";
const char* kCoe2 =
    "00010100" "01010001" "00110000" "01011100" "00000000" "01010000" "11001110" "01011111"
    "00010111" "00010001" "11111111" "01011111" "00001111" "01010011" "11001111" "01011111";

const char* kDavisPrime =
    "00000000" "00001111" "01110011" "00001111" "00000000" "00011111" "11111111" "00001111"
    "00000000" "00001111" "11111111" "00001111" "00000000" "00011111" "11111111" "00011111";
const char* kAbkPrime =
    "00000000" "01010101" "00000000" "01010101" "00000000" "01010101" "00000000" "01010101"
    "01011111" "01010101" "11111111" "01011111" "01011111" "01010101" "11111111" "01011111";
const char* kCoe2Prime =
    "00010100" "01010101" "00000000" "11001100" "00001111" "00010100" "00000010" "00011111"
    "00010111" "00010101" "11111111" "11001111" "00001111" "00010111" "11111111" "00011111";

const char* kWalkStart05 =
    "00000000" "00000110" "00010000" "00010100" "00001010" "01011000" "01111100" "01001101"
    "01000011" "11101101" "10111111" "01000111" "01010001" "00011111" "11111101" "01010111";
const char* kWalkStart076 =
    "00000101" "00000100" "00000101" "10100111" "00000101" "00000000" "00001111" "01110111"
    "00000011" "01110111" "01010101" "10000011" "01111011" "11111111" "10110111" "01111111";
// clang-format on

}  // namespace

const std::vector<NamedRule>& blok() {
    static const std::vector<NamedRule> catalog = {
        {"GKL", RuleTable::from_text(kGkl), 0.815},
        {"Das", RuleTable::from_text(kDas), 0.823},
        {"Davis", RuleTable::from_text(kDavis), 0.818},
        {"ABK", RuleTable::from_text(kAbk), 0.824},
        {"Coe1", RuleTable::from_text(kCoe1), 0.851},
        {"Coe2", RuleTable::from_text(kCoe2), 0.860},
    };
    return catalog;
}

const std::vector<NamedRule>& blok_prime() {
    static const std::vector<NamedRule> catalog = {
        {"GKL'", RuleTable::from_text(kGkl), 0.815},
        {"Das'", RuleTable::from_text(kDas), 0.823},
        {"Davis'", RuleTable::from_text(kDavisPrime), 0.818},
        {"ABK'", RuleTable::from_text(kAbkPrime), 0.824},
        {"Coe1'", RuleTable::from_text(kCoe1), 0.851},
        {"Coe2'", RuleTable::from_text(kCoe2Prime), 0.860},
    };
    return catalog;
}

const RuleTable& walk_start_nn05() {
    static const RuleTable r = RuleTable::from_text(kWalkStart05);
    return r;
}

const RuleTable& walk_start_nn076() {
    static const RuleTable r = RuleTable::from_text(kWalkStart076);
    return r;
}

std::vector<RuleTable> rules_of(std::span<const NamedRule> catalog) {
    std::vector<RuleTable> rules;
    rules.reserve(catalog.size());
    for (const auto& entry : catalog) rules.push_back(entry.rule);
    return rules;
}

std::optional<RuleTable> find_named_rule(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (!key.empty() && key.back() == 'p') key.back() = '\'';
    if (key == "nn05" || key == "nn0.5") return walk_start_nn05();
    if (key == "nn076" || key == "nn0.76") return walk_start_nn076();
    auto match = [&key](const std::vector<NamedRule>& catalog) -> std::optional<RuleTable> {
        for (const auto& entry : catalog) {
            std::string entry_key = entry.name;
            std::transform(entry_key.begin(), entry_key.end(), entry_key.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            if (entry_key == key) return entry.rule;
        }
        return std::nullopt;
    };
    if (auto hit = match(blok())) return hit;
    return match(blok_prime());
}

}  // namespace olab
