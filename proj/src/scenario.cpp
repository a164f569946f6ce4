#include "mrpsim/scenario.hpp"

#include "mrpsim/errors.hpp"

#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

namespace mrpsim {

GainMatrix make_gain(const GainSpec& spec, const InertiaModel& inertia) {
    switch (spec.mode) {
    case GainSpec::Mode::paper: return paper_gain();
    case GainSpec::Mode::explicit_matrix: return GainMatrix(spec.matrix);
    case GainSpec::Mode::pd: return compose_gain(spec.k1, spec.k2, inertia);
    }
    throw ValidationError("unreachable gain mode");
}

Mrp Scenario::initial_mrp() const {
    if (std::holds_alternative<Mrp>(initial_attitude)) {
        return std::get<Mrp>(initial_attitude);
    }
    return mrp_from_principal(std::get<PrincipalRotation>(initial_attitude));
}

SimState Scenario::initial_state() const {
    return pack_state(initial_mrp(), initial_omega);
}

void Scenario::validate() const {
    if (name.empty()) {
        throw ValidationError("scenario name must not be empty");
    }
    integrator.validate();
    if (!(blowup_bound > 0.0)) {
        throw ValidationError("blowup_bound must be positive");
    }
    if (strategy.variant == SwitchVariant::HystereticLayer && !(strategy.epsilon > 0.0)) {
        throw ValidationError("hysteretic strategy requires epsilon > 0");
    }
    if (!initial_omega.allFinite()) {
        throw ValidationError("initial.omega must be finite");
    }
    if (std::holds_alternative<Mrp>(initial_attitude) &&
        !std::get<Mrp>(initial_attitude).v.allFinite()) {
        throw ValidationError("initial.sigma must be finite");
    }
    if (!gain.matrix.allFinite() || !gain.k1.allFinite() || !gain.k2.allFinite()) {
        throw ValidationError("gain entries must be finite");
    }
    if (torque_limit && !(*torque_limit > 0.0)) {
        throw ValidationError("torque_limit must be positive when given");
    }
}

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
    bool consumed = false;
};

class KeyValueDocument {
public:
    explicit KeyValueDocument(const std::string& text) {
        std::istringstream stream(text);
        std::string line;
        int line_no = 0;
        while (std::getline(stream, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            const std::string trimmed = trim(line);
            if (trimmed.empty()) {
                continue;
            }
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'key = value', got '" + trimmed + "'");
            }
            const std::string key = trim(trimmed.substr(0, eq));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": empty key");
            }
            if (entries_.count(key)) {
                throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" +
                                 key + "'");
            }
            entries_[key] = RawEntry{value, line_no, false};
        }
    }

    std::optional<std::string> take(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        it->second.consumed = true;
        return it->second.value;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    void reject_unconsumed() const {
        for (const auto& [key, entry] : entries_) {
            if (!entry.consumed) {
                throw ParseError("unknown key '" + key + "' at line " +
                                 std::to_string(entry.line));
            }
        }
    }

private:
    static std::string trim(const std::string& s) {
        const auto begin = s.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            return {};
        }
        const auto end = s.find_last_not_of(" \t\r");
        return s.substr(begin, end - begin + 1);
    }

    std::map<std::string, RawEntry> entries_;
};

double parse_real(const std::string& key, const std::string& token) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        throw ParseError("key '" + key + "': malformed number '" + token + "'");
    }
    return value;
}

std::vector<double> parse_reals(const std::string& key, const std::string& value,
                                std::initializer_list<std::size_t> allowed_counts) {
    std::istringstream stream(value);
    std::vector<double> out;
    std::string token;
    while (stream >> token) {
        out.push_back(parse_real(key, token));
    }
    for (const std::size_t n : allowed_counts) {
        if (out.size() == n) {
            return out;
        }
    }
    std::string expected;
    for (const std::size_t n : allowed_counts) {
        expected += (expected.empty() ? "" : " or ") + std::to_string(n);
    }
    throw ParseError("key '" + key + "': expected " + expected + " numbers, got " +
                     std::to_string(out.size()));
}

Vec3 parse_vec3(const std::string& key, const std::string& value) {
    const auto v = parse_reals(key, value, {3});
    return Vec3(v[0], v[1], v[2]);
}

Mat3 parse_mat3_or_diag(const std::string& key, const std::string& value) {
    const auto v = parse_reals(key, value, {3, 9});
    if (v.size() == 3) {
        return Vec3(v[0], v[1], v[2]).asDiagonal();
    }
    Mat3 m;
    m << v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8];
    return m;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    KeyValueDocument doc(text);

    const auto name = doc.take("name");
    if (!name || name->empty()) {
        throw ValidationError("missing required key 'name'");
    }

    const auto inertia_diag = doc.take("inertia.diag");
    if (!inertia_diag) {
        throw ValidationError("missing required key 'inertia.diag'");
    }
    const Vec3 jd = parse_vec3("inertia.diag", *inertia_diag);
    const InertiaModel inertia = InertiaModel::diagonal(jd.x(), jd.y(), jd.z());

    // Exactly one of the two initial-attitude forms must be present.
    const auto sigma = doc.take("initial.sigma");
    const auto phi_deg = doc.take("initial.phi_deg");
    const auto axis = doc.take("initial.axis");
    if (sigma && (phi_deg || axis)) {
        throw ValidationError("give either initial.sigma or initial.phi_deg/initial.axis, not both");
    }
    if (!sigma && !(phi_deg && axis)) {
        throw ValidationError("missing initial attitude: initial.sigma or initial.phi_deg with initial.axis");
    }
    std::variant<PrincipalRotation, Mrp> initial_attitude = Mrp();
    if (sigma) {
        initial_attitude = Mrp(parse_vec3("initial.sigma", *sigma));
    } else {
        const double phi_rad = parse_real("initial.phi_deg", *phi_deg) * std::numbers::pi / 180.0;
        initial_attitude = PrincipalRotation(phi_rad, parse_vec3("initial.axis", *axis));
    }

    const auto omega = doc.take("initial.omega");
    if (!omega) {
        throw ValidationError("missing required key 'initial.omega'");
    }

    const auto gain_mode = doc.take("gain.mode");
    if (!gain_mode) {
        throw ValidationError("missing required key 'gain.mode'");
    }
    GainSpec gain;
    if (*gain_mode == "paper") {
        gain.mode = GainSpec::Mode::paper;
    } else if (*gain_mode == "explicit") {
        gain.mode = GainSpec::Mode::explicit_matrix;
        const auto matrix = doc.take("gain.matrix");
        if (!matrix) {
            throw ValidationError("gain.mode=explicit requires gain.matrix (18 numbers)");
        }
        const auto v = parse_reals("gain.matrix", *matrix, {18});
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 6; ++c) {
                gain.matrix(r, c) = v[static_cast<std::size_t>(r * 6 + c)];
            }
        }
    } else if (*gain_mode == "pd") {
        gain.mode = GainSpec::Mode::pd;
        const auto k1 = doc.take("gain.k1");
        const auto k2 = doc.take("gain.k2");
        if (!k1 || !k2) {
            throw ValidationError("gain.mode=pd requires gain.k1 and gain.k2 (3 or 9 numbers each)");
        }
        gain.k1 = parse_mat3_or_diag("gain.k1", *k1);
        gain.k2 = parse_mat3_or_diag("gain.k2", *k2);
    } else {
        throw ValidationError("gain.mode must be paper, explicit or pd; got '" + *gain_mode + "'");
    }
    if (gain.mode != GainSpec::Mode::explicit_matrix && doc.has("gain.matrix")) {
        throw ValidationError("gain.matrix is only valid with gain.mode=explicit");
    }
    if (gain.mode != GainSpec::Mode::pd && (doc.has("gain.k1") || doc.has("gain.k2"))) {
        throw ValidationError("gain.k1/gain.k2 are only valid with gain.mode=pd");
    }

    const auto tau = doc.take("tau");
    if (!tau) {
        throw ValidationError("missing required key 'tau'");
    }

    const auto strategy_name = doc.take("strategy");
    if (!strategy_name) {
        throw ValidationError("missing required key 'strategy'");
    }
    const auto epsilon = doc.take("epsilon");
    SwitchStrategy strategy;
    if (*strategy_name == "none") {
        strategy = SwitchStrategy::none();
    } else if (*strategy_name == "point_current") {
        strategy = SwitchStrategy::point_current();
    } else if (*strategy_name == "point_delayed") {
        strategy = SwitchStrategy::point_delayed();
    } else if (*strategy_name == "hysteretic") {
        if (!epsilon) {
            throw ValidationError("strategy=hysteretic requires epsilon");
        }
        strategy = SwitchStrategy::hysteretic(parse_real("epsilon", *epsilon));
    } else {
        throw ValidationError(
            "strategy must be none, point_current, point_delayed or hysteretic; got '" +
            *strategy_name + "'");
    }
    if (epsilon && strategy.variant != SwitchVariant::HystereticLayer) {
        throw ValidationError("epsilon is only valid with strategy=hysteretic");
    }

    IntegratorConfig integrator;
    integrator.tau = parse_real("tau", *tau);
    if (const auto rate = doc.take("integrator.sample_rate")) {
        integrator.sample_rate = parse_real("integrator.sample_rate", *rate);
    }
    if (const auto horizon = doc.take("integrator.horizon")) {
        integrator.horizon = parse_real("integrator.horizon", *horizon);
    }

    Scenario sc{*name,    inertia,  initial_attitude, parse_vec3("initial.omega", *omega),
                gain,     strategy, integrator,       100.0,
                std::nullopt};
    if (const auto bound = doc.take("blowup_bound")) {
        sc.blowup_bound = parse_real("blowup_bound", *bound);
    }
    if (const auto limit = doc.take("torque_limit")) {
        sc.torque_limit = parse_real("torque_limit", *limit);
    }

    doc.reject_unconsumed();
    sc.validate();
    return sc;
}

std::vector<Scenario> bundled_scenarios() {
    std::vector<Scenario> out;
    for (const auto& [name, text] : bundled_scenario_documents()) {
        out.push_back(parse_scenario(text));
    }
    return out;
}

} // namespace mrpsim
