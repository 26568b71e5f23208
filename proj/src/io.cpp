#include "snum/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "snum/errors.hpp"

namespace snum {

using json = nlohmann::ordered_json;

namespace {

json exponent_to_json(const Exponent& p) {
    if (p.is_inf()) return json("inf");
    return json(p.value());
}

Exponent exponent_from_json(const json& j, const char* field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Exponent::inf();
        throw InputError(std::string(field) + " must be a number or \"inf\"");
    }
    if (j.is_number()) return Exponent(j.get<double>());
    throw InputError(std::string(field) + " must be a number or \"inf\"");
}

json matrix_to_json_obj(const OperatorInstance& op) {
    json j;
    j["rows"] = op.matrix.rows();
    j["cols"] = op.matrix.cols();
    j["domain_p"] = exponent_to_json(op.domain.p);
    j["codomain_p"] = exponent_to_json(op.codomain.p);
    json data = json::array();
    for (int i = 0; i < op.matrix.rows(); ++i)
        for (int k = 0; k < op.matrix.cols(); ++k) data.push_back(op.matrix(i, k));
    j["data"] = std::move(data);
    return j;
}

OperatorInstance matrix_from_json_obj(const json& j) {
    if (!j.is_object()) throw InputError("matrix file must hold a JSON object");
    for (const char* field : {"rows", "cols", "data"}) {
        if (!j.contains(field)) throw InputError(std::string("matrix file is missing \"") + field + "\"");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
        throw InputError("rows/cols must be integers");
    }
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 1 || cols < 1) throw InputError("rows/cols must be positive");
    if (!j["data"].is_array() || static_cast<int>(j["data"].size()) != rows * cols) {
        throw InputError("data must be a flat row-major array of length rows*cols");
    }
    Mat M(rows, cols);
    int idx = 0;
    for (const auto& v : j["data"]) {
        if (!v.is_number()) throw InputError("data entries must be numbers");
        M(idx / cols, idx % cols) = v.get<double>();
        ++idx;
    }
    Exponent dp = j.contains("domain_p") ? exponent_from_json(j["domain_p"], "domain_p") : Exponent(2.0);
    Exponent cp = j.contains("codomain_p") ? exponent_from_json(j["codomain_p"], "codomain_p") : Exponent(2.0);
    return {M, SequenceSpace(cols, dp), SequenceSpace(rows, cp)};
}

json certified_to_json(const CertifiedValue& v, double tol_exact) {
    json j;
    j["lower"] = v.lower;
    if (v.upper.has_value()) {
        j["upper"] = *v.upper;
    } else {
        j["upper"] = "unknown";
    }
    j["status"] = status_name(v.status(tol_exact));
    j["lower_certified"] = v.lower_certified;
    j["upper_certified"] = v.upper_certified;
    j["methods"] = v.methods;
    return j;
}

json check_to_json(const CheckRecord& c) {
    json j;
    j["id"] = c.id;
    j["operands"] = c.operands;
    j["margin"] = c.margin;
    j["status"] = check_status_name(c.status);
    return j;
}

json report_header(const Config& cfg) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["toolkit_version"] = kToolkitVersion;
    j["config"] = json::parse(config_echo_json(cfg));
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw InputError("malformed JSON in " + path);
    return j;
}

std::string format_17g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

OperatorInstance read_matrix(const std::string& path) {
    try {
        return matrix_from_json_obj(parse_file(path));
    } catch (const json::exception& e) {
        throw InputError(std::string("matrix schema violation: ") + e.what());
    }
}

void write_matrix(const OperatorInstance& op, const std::string& path) {
    write_text(matrix_to_json_obj(op).dump(2) + "\n", path);
}

std::string matrix_to_json(const OperatorInstance& op) { return matrix_to_json_obj(op).dump(2) + "\n"; }

OperatorInstance matrix_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON matrix");
    return matrix_from_json_obj(j);
}

std::vector<OperatorInstance> read_corpus(const std::string& path) {
    json j = parse_file(path);
    if (!j.is_object() || !j.contains("operators") || !j["operators"].is_array()) {
        throw InputError("corpus file must hold {\"operators\": [...]}");
    }
    std::vector<OperatorInstance> ops;
    for (const auto& obj : j["operators"]) ops.push_back(matrix_from_json_obj(obj));
    return ops;
}

void write_corpus(const std::vector<OperatorInstance>& ops, const std::string& path) {
    json j;
    json arr = json::array();
    for (const OperatorInstance& op : ops) arr.push_back(matrix_to_json_obj(op));
    j["operators"] = std::move(arr);
    write_text(j.dump(2) + "\n", path);
}

std::string config_echo_json(const Config& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["restarts"] = cfg.restarts;
    j["ascent_iters"] = cfg.ascent_iters;
    j["tol_exact"] = cfg.tol_exact;
    j["tol_opt"] = cfg.tol_opt;
    j["epsilon"] = cfg.epsilon;
    j["enum_cap"] = cfg.enum_cap;
    j["vertex_cap"] = cfg.vertex_cap;
    j["mesh_cap"] = cfg.mesh_cap;
    j["mesh_steps"] = cfg.mesh_steps;
    j["prng"] = kPrngName;
    return j.dump();
}

std::string profile_report_json(const ProfileBundle& bundle, const OperatorInstance& op,
                                const Config& cfg) {
    json j = report_header(cfg);
    j["operator"] = {{"rows", op.matrix.rows()},
                     {"cols", op.matrix.cols()},
                     {"domain_p", exponent_to_json(op.domain.p)},
                     {"codomain_p", exponent_to_json(op.codomain.p)}};
    j["rank"] = bundle.rank;
    j["nmax"] = bundle.nmax;
    j["operator_norm"] = certified_to_json(bundle.norm.value, cfg.tol_exact);
    json kinds;
    for (SNumberKind k : kAllKinds) {
        json arr = json::array();
        const SNumberReport& rep = bundle.get(k);
        for (int n = 1; n <= rep.nmax(); ++n) {
            json entry = certified_to_json(rep.at(n), cfg.tol_exact);
            entry["n"] = n;
            arr.push_back(std::move(entry));
        }
        kinds[kind_name(k)] = std::move(arr);
    }
    j["kinds"] = std::move(kinds);
    return j.dump(2) + "\n";
}

std::string profile_report_csv(const ProfileBundle& bundle) {
    std::ostringstream os;
    os << "kind,lower,upper,status\n";
    for (SNumberKind k : kAllKinds) {
        const SNumberReport& rep = bundle.get(k);
        for (int n = 1; n <= rep.nmax(); ++n) {
            const CertifiedValue& v = rep.at(n);
            os << kind_name(k) << ',' << format_17g(v.lower) << ','
               << (v.upper ? format_17g(*v.upper) : "unknown") << ',' << status_name(v.status()) << '\n';
        }
    }
    return os.str();
}

std::string witness_report_json(const WitnessChain& chain, const OperatorInstance& op,
                                const Config& cfg) {
    json j = report_header(cfg);
    j["variant"] = chain_variant_name(chain.variant);
    j["epsilon"] = chain.epsilon;
    j["length"] = chain.length();
    j["truncated"] = chain.truncated;
    if (chain.truncated) j["truncation_note"] = chain.truncation_note;
    json links = json::array();
    for (const ChainLink& link : chain.links) {
        json l;
        l["value"] = link.value;
        l["exact"] = link.exact;
        l["x"] = std::vector<double>(link.x.data(), link.x.data() + link.x.size());
        l["b"] = std::vector<double>(link.b.data(), link.b.data() + link.b.size());
        links.push_back(std::move(l));
    }
    j["links"] = std::move(links);
    auto mat_to_arr = [](const Mat& M) {
        json arr = json::array();
        for (int i = 0; i < M.rows(); ++i)
            for (int k = 0; k < M.cols(); ++k) arr.push_back(M(i, k));
        return arr;
    };
    j["Sn"] = mat_to_arr(chain.Sn);
    j["normA"] = chain.normA;
    j["normB"] = chain.normB;
    j["det"] = chain.det;
    j["hk_lowers"] = chain.hk_lowers;
    json checks = json::array();
    for (const CheckRecord& c : validate_chain(chain, op)) checks.push_back(check_to_json(c));
    j["invariants"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string verification_report_json(const std::vector<VerificationReport>& suites, const Config& cfg) {
    json j = report_header(cfg);
    json arr = json::array();
    for (const VerificationReport& rep : suites) {
        json s;
        s["suite"] = rep.suite;
        s["toolkit_version"] = rep.toolkit_version;
        s["corpus"] = {{"seed", rep.corpus.seed},         {"count", rep.corpus.count},
                       {"dim_min", rep.corpus.dim_min},   {"dim_max", rep.corpus.dim_max},
                       {"pairs", rep.corpus.pairs},       {"distribution", rep.corpus.distribution}};
        s["passes"] = rep.count(CheckStatus::pass);
        s["failures"] = rep.count(CheckStatus::fail);
        s["skipped"] = rep.count(CheckStatus::skipped_uncertified);
        json checks = json::array();
        for (const CheckRecord& c : rep.checks) checks.push_back(check_to_json(c));
        s["checks"] = std::move(checks);
        arr.push_back(std::move(s));
    }
    j["suites"] = std::move(arr);
    return j.dump(2) + "\n";
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace snum
