#include "bchden/report_json.hpp"

#include "json.hpp"

namespace bchden {

using json = nlohmann::ordered_json;

std::string to_json(const DenominatorReport& report)
{
    json j = {
        {"degree", report.degree},
        {"alphabet", report.alphabet},
        {"d_n", report.d_n.get_str()},
        {"common_denominator", report.common_denominator.get_str()},
        {"observed_lcm", report.observed_lcm.get_str()},
        {"minimal", report.minimal},
        {"divisibility_ok", report.divisibility_ok},
        {"witness", report.witness_max.to_string(report.alphabet)},
    };
    if (report.divisibility_witness)
        j["divisibility_witness"] = report.divisibility_witness->to_string(report.alphabet);
    return j.dump();
}

std::string to_json(const CongruenceReport& report)
{
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"word", v.word.to_string(2)},
                              {"numerator", v.numerator.get_str()},
                              {"residue", v.residue}});
    json zero_failures = json::array();
    for (const auto& w : report.exceptional_zero_failures)
        zero_failures.push_back(w.to_string(2));
    return json{
        {"p", report.p},
        {"degree", report.degree},
        {"modulus", report.modulus},
        {"expected_residue", report.expected_residue},
        {"words_checked", report.words_checked},
        {"passed", report.passed()},
        {"violations", violations},
        {"exceptional_zero_failures", zero_failures},
    }
        .dump();
}

std::string to_json(const GoldbergDegree& result)
{
    json j = {
        {"degree", result.degree},
        {"goldberg_denominator", result.goldberg_denominator.get_str()},
        {"passed", result.passed},
    };
    if (result.witness) {
        j["witness"] = result.witness->to_string(2);
        j["witness_denominator"] = result.witness_denominator.get_str();
        j["ratio"] = result.ratio.get_str();
    }
    return j.dump();
}

} // namespace bchden
