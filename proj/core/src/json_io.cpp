#include "twoband/json_io.hpp"

#include <json.hpp>

namespace twoband {

namespace {

using nlohmann::json;

json parse_or_fail(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::InvalidInput, "malformed JSON");
    return j;
}

Complex entry_from_json(const json& v) {
    if (v.is_number()) return Complex{v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return Complex{v[0].get<double>(), v[1].get<double>()};
    fail(ErrorCode::InvalidInput, "band entry must be a number or [re, im]");
}

std::vector<Complex> band_from_json(const json& v) {
    if (!v.is_array()) fail(ErrorCode::InvalidInput, "band must be an array");
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(entry_from_json(e));
    return out;
}

json band_to_json(const std::vector<Complex>& band, Mode mode) {
    json arr = json::array();
    for (const Complex& v : band) {
        if (mode == Mode::Complex)
            arr.push_back(json::array({v.real(), v.imag()}));
        else
            arr.push_back(v.real());
    }
    return arr;
}

int int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        fail(ErrorCode::InvalidInput, std::string("missing or non-integer field '") + name + "'");
    return j[name].get<int>();
}

double num_field(const json& j, const char* name, std::optional<double> fallback = {}) {
    if (!j.contains(name)) {
        if (fallback) return *fallback;
        fail(ErrorCode::InvalidInput, std::string("missing numeric field '") + name + "'");
    }
    if (!j[name].is_number()) fail(ErrorCode::InvalidInput, std::string("field '") + name + "' must be numeric");
    return j[name].get<double>();
}

std::pair<int, int> range_field(const json& j, const char* name) {
    if (!j.contains(name)) fail(ErrorCode::InvalidInput, std::string("missing range field '") + name + "'");
    const auto& v = j[name];
    if (v.is_number_integer()) {
        const int x = v.get<int>();
        return {x, x};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
        return {v[0].get<int>(), v[1].get<int>()};
    fail(ErrorCode::InvalidInput, std::string("range '") + name + "' must be an int or [lo, hi]");
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

} // namespace

Mode parse_mode(const std::string& s) {
    if (s == "positive") return Mode::PositiveReal;
    if (s == "nonnegative") return Mode::NonnegativeReal;
    if (s == "complex") return Mode::Complex;
    fail(ErrorCode::InvalidInput, "mode must be positive, nonnegative or complex");
}

InstanceSpec parse_instance(const std::string& text) {
    const json j = parse_or_fail(text);
    if (!j.is_object()) fail(ErrorCode::InvalidInput, "instance must be a JSON object");

    const int n = int_field(j, "n");
    const int b = int_field(j, "b");
    const int k = int_field(j, "k");
    if (!j.contains("mode") || !j["mode"].is_string())
        fail(ErrorCode::InvalidInput, "missing string field 'mode'");
    const Mode mode = parse_mode(j["mode"].get<std::string>());

    InstanceSpec spec;
    if (j.contains("lower") || j.contains("upper")) {
        if (!j.contains("lower") || !j.contains("upper"))
            fail(ErrorCode::InvalidInput, "explicit instance needs both 'lower' and 'upper'");
        spec.explicit_instance = BandMatrix(n, b, k, band_from_json(j["lower"]), band_from_json(j["upper"]), mode);
    } else if (j.contains("seed")) {
        GeneratorSpec gen;
        gen.n = n;
        gen.b = b;
        gen.k = k;
        gen.mode = mode;
        if (!j["seed"].is_number_integer()) fail(ErrorCode::InvalidInput, "'seed' must be an integer");
        gen.seed = j["seed"].get<std::uint64_t>();
        gen.low = num_field(j, "low", 0.5);
        gen.high = num_field(j, "high", 2.0);
        if (n < 1 || b < 1 || k < 1) fail(ErrorCode::BadOffset, "n, b and k must all be at least 1");
        spec.generator = gen;
    } else {
        fail(ErrorCode::InvalidInput, "instance needs either bands or a seed");
    }
    return spec;
}

BandMatrix realize(const InstanceSpec& spec) {
    if (spec.explicit_instance) return *spec.explicit_instance;
    if (spec.generator) return generate_band_matrix(*spec.generator);
    fail(ErrorCode::InvalidInput, "empty instance spec");
}

std::string instance_to_json(const BandMatrix& bm, int indent) {
    json j;
    j["n"] = bm.n();
    j["b"] = bm.b();
    j["k"] = bm.k();
    j["mode"] = mode_name(bm.mode());
    j["lower"] = band_to_json(bm.lower(), bm.mode());
    j["upper"] = band_to_json(bm.upper(), bm.mode());
    return j.dump(indent);
}

SweepSpec parse_sweep(const std::string& text) {
    const json j = parse_or_fail(text);
    if (!j.is_object()) fail(ErrorCode::InvalidInput, "sweep spec must be a JSON object");

    SweepSpec s;
    std::tie(s.n_lo, s.n_hi) = range_field(j, "n");
    std::tie(s.b_lo, s.b_hi) = range_field(j, "b");
    std::tie(s.k_lo, s.k_hi) = range_field(j, "k");
    if (j.contains("mode")) s.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) fail(ErrorCode::InvalidInput, "'seed' must be an integer");
        s.master_seed = j["seed"].get<std::uint64_t>();
    }
    s.low = num_field(j, "low", 0.5);
    s.high = num_field(j, "high", 2.0);
    s.tol = num_field(j, "tol", 1e-6);
    s.zero_tol = num_field(j, "zero_tol", 1e-5);
    s.phase_tol = num_field(j, "phase_tol", 1e-6);
    return s;
}

std::string spectrum_report_to_json(const SpectrumReport& report, int indent) {
    json j;
    j["p"] = report.p;
    j["g"] = report.g;
    j["zero_multiplicity"] = report.zero_multiplicity;
    json rays = json::array();
    for (const auto& ray : report.rays) {
        json r;
        r["j"] = ray.j;
        r["phase"] = ray.phase;
        r["radii"] = ray.radii;
        rays.push_back(std::move(r));
    }
    j["rays"] = std::move(rays);
    json eig = json::array();
    for (const Complex& z : report.eigenvalues) eig.push_back(complex_to_json(z));
    j["eigenvalues"] = std::move(eig);
    j["source"] = report.source == SpectrumReport::Source::Structured ? "structured" : "oracle";
    return j.dump(indent);
}

std::string direct_sum_to_json(const DirectSumDecomposition& dec, int indent) {
    json j;
    j["g"] = static_cast<int>(dec.blocks.size());
    j["perm"] = dec.perm.sigma();
    j["block_sizes"] = dec.block_sizes;
    json blocks = json::array();
    for (const auto& blk : dec.blocks) blocks.push_back(json::parse(instance_to_json(blk)));
    j["blocks"] = std::move(blocks);
    return j.dump(indent);
}

std::string cyclic_to_json(const CyclicDecomposition& dec, int indent) {
    json j;
    j["p"] = dec.index_data.p;
    j["transposed"] = dec.transposed;
    j["gammas"] = dec.index_data.gammas;
    j["zs"] = dec.index_data.zs;
    j["sizes"] = dec.index_data.sizes;
    j["partials"] = dec.index_data.partials;
    j["perm"] = dec.perm.sigma();
    json blocks = json::array();
    for (const auto& blk : dec.blocks) {
        json b;
        b["rows"] = blk.rows;
        b["cols"] = blk.cols;
        b["orientation"] = blk.orientation == Bidiagonal::Lower ? "lower" : "upper";
        json main = json::array();
        for (const Complex& z : blk.main) main.push_back(complex_to_json(z));
        json off = json::array();
        for (const Complex& z : blk.off) off.push_back(complex_to_json(z));
        b["main"] = std::move(main);
        b["off"] = std::move(off);
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j.dump(indent);
}

std::string oscillatory_to_json(const OscillatoryReport& report, int indent) {
    json j;
    j["tn_ok"] = report.tn_ok;
    j["nonsingular_ok"] = report.nonsingular_ok;
    j["det"] = report.det;
    j["band_positive_ok"] = report.band_positive_ok;
    j["max_checked_minor_order"] = report.max_checked_minor_order;
    j["oscillatory"] = report.oscillatory();
    return j.dump(indent);
}

} // namespace twoband
