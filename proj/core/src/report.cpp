#include "tracecodes/report.hpp"

#include <json.hpp>

#include <sstream>

namespace tracecodes {

namespace {

using nlohmann::json;

json rows_json(const std::vector<std::pair<uint64_t, uint64_t>>& rows) {
    json a = json::array();
    for (const auto& [w, fr] : rows) a.push_back({w, fr});
    return a;
}

json predicted_json(const PredictedDistribution& p) {
    json j;
    j["case"] = to_string(p.case_tag);
    json rows = json::array();
    for (const PredictedRow& r : p.rows) rows.push_back({r.weight, r.frequency});
    j["rows"] = rows;
    j["expected_total"] = p.expected_total;
    if (p.max_nonzero_weights) j["max_nonzero_weights"] = *p.max_nonzero_weights;
    if (p.d_min) j["d_min"] = *p.d_min;
    if (p.d_max) j["d_max"] = *p.d_max;
    return j;
}

json hypotheses_json(const std::vector<HypothesisCheck>& hs) {
    json a = json::array();
    for (const HypothesisCheck& h : hs) a.push_back({{"condition", h.condition}, {"holds", h.holds}});
    return a;
}

json parameters_json(const CodeSpec& spec) {
    const FiniteField& f = spec.f();
    json j;
    j["p"] = f.p();
    j["m"] = f.m();
    j["q"] = f.q();
    j["N"] = spec.N;
    j["N1"] = spec.N1;
    j["N2"] = spec.N2;
    j["n"] = spec.n;
    j["modulus"] = f.modulus();
    j["alpha"] = f.alpha().token();
    json d = json::array();
    for (const FieldElem& x : spec.D) d.push_back(x.token());
    j["D"] = d;
    j["L_size"] = spec.L.size();
    j["gray_length"] = spec.gray_length();
    j["codewords"] = spec.codeword_count();
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

AnalyzeReport analyze(const CodeSpec& spec, const AnalyzeOptions& opt) {
    const FiniteField& f = spec.f();
    uint64_t p = f.p(), q = f.q();
    AnalyzeReport r;
    r.spec = spec;

    r.lee = enumerate_weights(spec, WeightKind::LeeOverR, opt.budget);
    r.cd = enumerate_weights(spec, WeightKind::HammingOverFp, opt.budget);

    uint64_t ker = evaluation_kernel_size(spec);
    r.image_size = q * q / ker;
    uint64_t img = r.image_size, k = 0;
    while (img % p == 0) {
        img /= p;
        ++k;
    }
    if (img == 1 && k % 2 == 0)
        r.m_prime = k / 2;
    else
        r.image_anomaly = true;

    r.gray_length = spec.gray_length();
    r.gray_dimension = k;
    r.gray_distance = r.lee.min_nonzero_weight();
    r.griesmer = griesmer_check(r.gray_length, r.gray_dimension, r.gray_distance, p);

    r.wmax_dual = opt.wmax_dual;
    r.dual_distance = dual_lee_distance_upto(spec, opt.wmax_dual);
    if (r.dual_distance)
        r.sss = sss_classify(*r.dual_distance);
    else if (opt.wmax_dual >= 2)
        // no dual vector of support <= 2 means none of Lee weight <= 2
        r.sss = SssClass::Democratic;
    else
        r.sss = SssClass::Unclassified;

    r.minimality = minimal_codewords(spec, opt.budget);
    r.ab_condition = ashikhmin_barg(r.gray_distance, r.lee.rows.back().first, p);

    r.massey = massey_access_structure(gray_image(spec, opt.budget), opt.massey_cap,
                                       r.dual_distance);
    r.massey.classification = r.sss;

    const std::vector<std::string>& ids = opt.theorems.empty() ? known_theorems() : opt.theorems;
    for (const std::string& id : ids) {
        r.theorems.push_back(verify_theorem(spec, id, opt.budget));
        switch (r.theorems.back().verdict) {
            case Verdict::Confirmed: ++r.confirmed; break;
            case Verdict::Refuted: ++r.refuted; break;
            case Verdict::NotApplicable: ++r.not_applicable; break;
        }
    }
    r.all_applicable_confirmed = r.refuted == 0;
    return r;
}

std::string spec_json(const CodeSpec& spec) {
    json j = parameters_json(spec);
    j["schema"] = 1;
    return dump(j);
}

std::string spec_csv(const CodeSpec& spec) {
    const FiniteField& f = spec.f();
    std::ostringstream out;
    out << "key,value\n";
    out << "p," << f.p() << "\n";
    out << "m," << f.m() << "\n";
    out << "q," << f.q() << "\n";
    out << "N," << spec.N << "\n";
    out << "N1," << spec.N1 << "\n";
    out << "N2," << spec.N2 << "\n";
    out << "n," << spec.n << "\n";
    std::string mod;
    for (size_t i = 0; i < f.modulus().size(); ++i)
        mod += (i ? " " : "") + std::to_string(f.modulus()[i]);
    out << "modulus," << mod << "\n";
    std::string d;
    for (size_t i = 0; i < spec.D.size(); ++i) d += (i ? " " : "") + spec.D[i].token();
    out << "D," << d << "\n";
    out << "L_size," << spec.L.size() << "\n";
    out << "gray_length," << spec.gray_length() << "\n";
    out << "codewords," << spec.codeword_count() << "\n";
    return out.str();
}

std::string spec_text(const CodeSpec& spec) {
    const FiniteField& f = spec.f();
    std::ostringstream out;
    out << "parameters (p, m, N) = (" << f.p() << ", " << f.m() << ", " << spec.N << ")\n";
    out << "q = " << f.q() << ", N1 = " << spec.N1 << ", N2 = " << spec.N2 << ", n = " << spec.n
        << "\n";
    out << "modulus (low degree first):";
    for (uint64_t c : f.modulus()) out << " " << c;
    out << "\nD =";
    for (const FieldElem& x : spec.D) out << " " << x.token();
    out << "\n|L| = " << spec.L.size() << ", Gray length " << spec.gray_length()
        << ", codewords " << spec.codeword_count() << "\n";
    return out.str();
}

namespace {

json report_to_json(const AnalyzeReport& r) {
    json j;
    j["schema"] = 1;
    j["parameters"] = parameters_json(r.spec);

    j["lee_enumerator"] = {{"kind", to_string(r.lee.kind)},
                           {"total", r.lee.total},
                           {"rows", rows_json(r.lee.rows)}};
    j["cd_enumerator"] = {{"kind", to_string(r.cd.kind)},
                          {"total", r.cd.total},
                          {"rows", rows_json(r.cd.rows)}};

    j["image"] = {{"size", r.image_size},
                  {"injective", r.image_size == r.spec.codeword_count()},
                  {"anomaly", r.image_anomaly}};
    if (r.m_prime) j["image"]["m_prime"] = *r.m_prime;

    j["gray_code"] = {{"length", r.gray_length},
                      {"dimension", r.gray_dimension},
                      {"distance", r.gray_distance},
                      {"griesmer_sum", r.griesmer.sum},
                      {"griesmer_equality", r.griesmer.meets_with_equality}};

    j["dual"] = {{"wmax", r.wmax_dual}};
    if (r.dual_distance)
        j["dual"]["distance"] = *r.dual_distance;
    else
        j["dual"]["distance"] = nullptr;

    j["minimality"] = {{"all_minimal", r.minimality.all_minimal},
                       {"ab_condition", r.ab_condition}};
    if (r.minimality.witness)
        j["minimality"]["witness"] = {r.minimality.witness->first, r.minimality.witness->second};

    j["secret_sharing"] = {{"classification", to_string(r.sss)},
                           {"minimal_access_set_count", r.massey.minimal_access_sets.size()},
                           {"dictators", r.massey.dictators},
                           {"truncated", r.massey.truncated}};

    json ts = json::array();
    for (const TheoremReport& t : r.theorems) {
        json tj;
        tj["id"] = t.theorem_id;
        tj["verdict"] = to_string(t.verdict);
        tj["detail"] = t.detail;
        tj["hypotheses"] = hypotheses_json(t.hypothesis_report);
        tj["predicted"] = t.predicted ? predicted_json(*t.predicted) : json(nullptr);
        tj["observed"] = t.observed ? rows_json(t.observed->rows) : json(nullptr);
        ts.push_back(tj);
    }
    j["theorems"] = ts;

    j["summary"] = {{"confirmed", r.confirmed},
                    {"refuted", r.refuted},
                    {"not_applicable", r.not_applicable},
                    {"all_applicable_confirmed", r.all_applicable_confirmed}};
    return j;
}

}  // namespace

std::string report_json(const AnalyzeReport& r) { return dump(report_to_json(r)); }

std::string report_csv(const AnalyzeReport& r) {
    std::ostringstream out;
    out << "kind,weight,frequency\n";
    for (const auto& [w, fr] : r.lee.rows) out << "lee," << w << "," << fr << "\n";
    for (const auto& [w, fr] : r.cd.rows) out << "cd," << w << "," << fr << "\n";
    return out.str();
}

std::string report_text(const AnalyzeReport& r) {
    std::ostringstream out;
    out << spec_text(r.spec);
    out << "\nLee weight enumerator (total " << r.lee.total << "):\n";
    out << "Weight | Frequency\n";
    for (const auto& [w, fr] : r.lee.rows) out << w << " | " << fr << "\n";
    out << "\ncompanion code enumerator (total " << r.cd.total << "):\n";
    out << "Weight | Frequency\n";
    for (const auto& [w, fr] : r.cd.rows) out << w << " | " << fr << "\n";
    out << "\nimage size " << r.image_size
        << (r.image_size == r.spec.codeword_count() ? " (injective)" : "");
    if (r.m_prime) out << ", m' = " << *r.m_prime;
    if (r.image_anomaly) out << ", image anomaly";
    out << "\nGray code [" << r.gray_length << ", " << r.gray_dimension << ", " << r.gray_distance
        << "] over F_" << r.spec.f().p() << ", Griesmer sum " << r.griesmer.sum << " ("
        << (r.griesmer.meets_with_equality ? "meets with equality" : "strict") << ")\n";
    out << "dual Lee distance (wmax " << r.wmax_dual << "): ";
    if (r.dual_distance)
        out << *r.dual_distance;
    else
        out << "none found";
    out << "\nminimality: " << (r.minimality.all_minimal ? "all nonzero codewords minimal"
                                                         : "covering pair exists");
    out << " (sufficient condition " << (r.ab_condition ? "holds" : "fails") << ")\n";
    out << "secret sharing: " << to_string(r.sss) << ", "
        << r.massey.minimal_access_sets.size() << " minimal access sets";
    if (!r.massey.dictators.empty()) {
        out << ", dictators:";
        for (uint32_t d : r.massey.dictators) out << " " << d;
    }
    if (r.massey.truncated) out << " (truncated)";
    out << "\n\nchecks:\n";
    for (const TheoremReport& t : r.theorems)
        out << t.theorem_id << ": " << to_string(t.verdict) << " - " << t.detail << "\n";
    out << "\nsummary: " << r.confirmed << " confirmed, " << r.refuted << " refuted, "
        << r.not_applicable << " not applicable\n";
    return out.str();
}

std::string enumerator_csv(const WeightEnumerator& w) {
    std::ostringstream out;
    out << "weight,frequency\n";
    for (const auto& [wt, fr] : w.rows) out << wt << "," << fr << "\n";
    return out.str();
}

std::string codeword_matrix_csv(const CodeSpec& spec, const RingCode& code) {
    const FiniteField& f = spec.f();
    uint64_t q = f.q();
    std::ostringstream out;
    for (const auto& word : code.words) {
        for (size_t i = 0; i < word.size(); ++i) {
            if (i) out << ",";
            out << f.token_of(word[i] / q) << "+" << f.token_of(word[i] % q) << "u";
        }
        out << "\n";
    }
    return out.str();
}

std::string gray_matrix_csv(const CodeSpec& spec, const RingCode& code) {
    const FiniteField& f = spec.f();
    uint64_t p = f.p(), q = f.q();
    std::ostringstream out;
    for (const auto& word : code.words) {
        for (size_t i = 0; i < word.size(); ++i) {
            uint64_t ta = word[i] / q, tb = word[i] % q;
            if (i) out << ",";
            out << tb << "," << (ta + tb) % p;
        }
        out << "\n";
    }
    return out.str();
}

SweepRow sweep_row(uint64_t p, uint64_t m, uint64_t N, const AnalyzeOptions& opt) {
    SweepRow row;
    row.p = p;
    row.m = m;
    row.N = N;
    try {
        auto field = FiniteField::make(p, m);
        CodeSpec spec = derive_spec(field, N);
        row.N2 = spec.N2;
        row.n = spec.n;
        row.L_size = spec.L.size();
        row.case_tag = to_string(predict_distribution(spec).case_tag);
        AnalyzeReport rep = analyze(spec, opt);
        row.d_L = rep.gray_distance;
        row.confirmed = rep.confirmed;
        row.refuted = rep.refuted;
        row.not_applicable = rep.not_applicable;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

namespace {

json sweep_rows_json(const std::vector<SweepRow>& rows) {
    json a = json::array();
    for (const SweepRow& r : rows) {
        json j;
        j["p"] = r.p;
        j["m"] = r.m;
        j["N"] = r.N;
        j["N2"] = r.N2;
        j["n"] = r.n;
        j["L_size"] = r.L_size;
        j["case"] = r.case_tag;
        j["d_L"] = r.d_L ? json(*r.d_L) : json(nullptr);
        j["confirmed"] = r.confirmed;
        j["refuted"] = r.refuted;
        j["not_applicable"] = r.not_applicable;
        j["error"] = r.error;
        a.push_back(j);
    }
    return a;
}

}  // namespace

std::string sweep_json(const std::vector<SweepRow>& rows) {
    json j;
    j["schema"] = 1;
    j["rows"] = sweep_rows_json(rows);
    return dump(j);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "p,m,N,N2,n,L_size,case,d_L,confirmed,refuted,not_applicable,error\n";
    for (const SweepRow& r : rows) {
        out << r.p << "," << r.m << "," << r.N << "," << r.N2 << "," << r.n << "," << r.L_size
            << "," << csv_escape(r.case_tag) << ",";
        if (r.d_L) out << *r.d_L;
        out << "," << r.confirmed << "," << r.refuted << "," << r.not_applicable << ","
            << csv_escape(r.error) << "\n";
    }
    return out.str();
}

std::string sweep_text(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    for (const SweepRow& r : rows) {
        out << "(" << r.p << ", " << r.m << ", " << r.N << ")";
        if (!r.error.empty()) {
            out << " error: " << r.error << "\n";
            continue;
        }
        out << " N2=" << r.N2 << " n=" << r.n << " |L|=" << r.L_size << " case=" << r.case_tag
            << " d_L=";
        if (r.d_L) out << *r.d_L;
        out << " confirmed=" << r.confirmed << " refuted=" << r.refuted
            << " not_applicable=" << r.not_applicable << "\n";
    }
    return out.str();
}

}  // namespace tracecodes
