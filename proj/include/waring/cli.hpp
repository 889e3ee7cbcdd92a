#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "waring/acceptance.hpp"
#include "waring/json_io.hpp"

// In-process command implementations behind the `wrank` executable; kept as
// functions so tests can drive them without spawning processes.
//
// Exit codes: 0 success; 2 malformed input or hypothesis violation;
// 3 inadmissible (s, r) pair; 4 construction failure; 5 failing check
// (named on stderr/stdout); 6 certificate schema mismatch.

namespace waring::cli {

inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kInadmissible = 3;
inline constexpr int kConstructionFailed = 4;
inline constexpr int kCheckFailed = 5;
inline constexpr int kSchemaMismatch = 6;

namespace detail {

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return nlohmann::json::parse(in);
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace detail

inline int cmd_admissible(unsigned m, unsigned s, unsigned d, std::ostream& out,
                          std::ostream& err) {
    try {
        std::vector<unsigned> set;
        for (unsigned r = s; r <= 2 * d + s - 7; ++r) {
            strata::Band band = strata::admissible(m, s, d, r);
            out << "r=" << r << " band=" << strata::band_tag_name(band.tag) << "\n";
            if (band.tag != strata::BandTag::inadmissible) set.push_back(r);
        }
        out << "admissible:";
        for (unsigned r : set) out << " " << r;
        out << "\n";
        return kOk;
    } catch (const strata::HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

inline int cmd_witness(unsigned m, unsigned s, unsigned d, unsigned r, std::uint64_t seed,
                       const std::string& out_path, std::ostream& out, std::ostream& err) {
    try {
        strata::Witness w = strata::witness(m, s, d, r, seed);
        detail::save_json(out_path, nlohmann::json(w));
        out << "witness m=" << m << " s=" << s << " d=" << d << " r=" << r
            << " band=" << strata::band_tag_name(w.band.tag) << " -> " << out_path << "\n";
        return kOk;
    } catch (const strata::InadmissibleError& e) {
        err << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const strata::HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const strata::ConstructionError& e) {
        err << "error: " << e.what() << "\n";
        return kConstructionFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

inline int cmd_certify(const std::string& witness_path, const std::string& out_path,
                       std::uint64_t falsify_budget, std::uint64_t seed, std::ostream& out,
                       std::ostream& err) {
    strata::Witness w;
    try {
        w = detail::load_json(witness_path).get<strata::Witness>();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    try {
        certify::Certificate cert = certify::certify(w, falsify_budget, seed);
        detail::save_json(out_path, nlohmann::json(cert));
        out << "certified br=" << cert.br_cert.border_rank
            << " sr=" << cert.sr_lower.symmetric_rank << " (" << cert.sr_lower.lemma_id
            << ") -> " << out_path << "\n";
        return kOk;
    } catch (const certify::CertificationRefused& e) {
        err << "refused: " << e.item << "\n";
        return kCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

inline int cmd_verify(const std::string& cert_path, std::ostream& out, std::ostream& err) {
    certify::Certificate cert;
    try {
        cert = detail::load_json(cert_path).get<certify::Certificate>();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    try {
        if (auto failing = certify::verify_certificate(cert)) {
            out << "FAIL " << *failing << "\n";
            return kCheckFailed;
        }
        out << "OK br=" << cert.br_cert.border_rank << " sr=" << cert.sr_lower.symmetric_rank
            << "\n";
        return kOk;
    } catch (const certify::SchemaMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kSchemaMismatch;
    }
}

inline int cmd_rank_binary(const std::vector<std::string>& coeffs, std::ostream& out,
                           std::ostream& err) {
    try {
        if (coeffs.size() < 2) throw std::invalid_argument("need at least two coefficients");
        exact::Vec a;
        for (const auto& s : coeffs) a.push_back(exact::parse_rational(s));
        sylvester::BinForm f(static_cast<unsigned>(a.size() - 1), a);
        out << nlohmann::json(sylvester::rank_binary(f)).dump(2) << "\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

inline int cmd_h1(const std::string& scheme_path, unsigned d, std::ostream& out,
                  std::ostream& err) {
    try {
        schemes::Scheme z = detail::load_json(scheme_path).get<schemes::Scheme>();
        out << nlohmann::json(schemes::h01(z, d)).dump(2) << "\n";
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

inline int cmd_selftest(std::uint64_t seed, std::ostream& out) {
    acceptance::AcceptanceReport report = acceptance::run_acceptance(out, seed);
    if (report.all_pass()) {
        out << "selftest: all criteria pass\n";
        return kOk;
    }
    out << "selftest: failing criteria:";
    for (const auto& r : report.results)
        if (!r.pass) out << " " << r.id;
    out << "\n";
    return kCheckFailed;
}

}  // namespace waring::cli
