#include "lcfn/registry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lcfn/dirichlet.hpp"
#include "lcfn/eulerian.hpp"
#include "lcfn/gen_exp.hpp"
#include "lcfn/lc_fc.hpp"
#include "lcfn/numerics.hpp"
#include "lcfn/worked_examples.hpp"

namespace lcfn {

namespace {

using json = nlohmann::ordered_json;
using Params = std::map<std::string, std::string>;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double need_double(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end())
        throw usage_error("missing parameter --" + key);
    try {
        std::size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw usage_error("parameter --" + key + " is not a number");
        return v;
    } catch (const std::invalid_argument&) {
        throw usage_error("parameter --" + key + " is not a number");
    }
}

double opt_double(const Params& p, const std::string& key, double fallback) {
    return p.count(key) ? need_double(p, key) : fallback;
}

long need_long(const Params& p, const std::string& key) {
    double v = need_double(p, key);
    if (v != std::floor(v))
        throw usage_error("parameter --" + key + " must be an integer");
    return static_cast<long>(v);
}

int need_int(const Params& p, const std::string& key) {
    return static_cast<int>(need_long(p, key));
}

Complex need_complex(const Params& p, const std::string& key) {
    return {need_double(p, key), opt_double(p, key + "-im", 0.0)};
}

std::string opt_string(const Params& p, const std::string& key, const std::string& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
}

// Seed selection: --example beta|cos|sinh with --w, or --p-coeffs FILE
// (one complex per line, "re im") with --r-f.
SeriesFunction seed_from_params(const Params& p) {
    if (p.count("p-coeffs")) {
        if (!p.count("r-f"))
            throw usage_error("--p-coeffs requires --r-f");
        std::ifstream in(p.at("p-coeffs"));
        if (!in)
            throw usage_error("cannot open coefficient file " + p.at("p-coeffs"));
        std::vector<Complex> coeffs;
        double re, im;
        while (in >> re >> im)
            coeffs.emplace_back(re, im);
        double rf = need_double(p, "r-f");
        auto stream = [coeffs](int n) {
            return n < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(n)]
                                                       : Complex(0.0);
        };
        return SeriesFunction::from_p_stream(stream, rf);
    }
    std::string name = opt_string(p, "example", "");
    if (name.empty())
        throw usage_error("select a seed with --example beta|cos|sinh or --p-coeffs FILE --r-f R");
    if (name == "beta")
        return make_example({ExampleKind::Tag::Beta, Complex(0.0)});
    Complex w = need_complex(p, "w");
    if (name == "cos")
        return make_example({ExampleKind::Tag::CosEven, w});
    if (name == "sinh")
        return make_example({ExampleKind::Tag::SinhOdd, w});
    throw usage_error("unknown example '" + name + "'");
}

DirichletCharacter character_from_params(const Params& p) {
    int q = need_int(p, "q");
    auto chars = characters_mod(q);
    int idx = need_int(p, "chi");
    if (idx < 0 || idx >= static_cast<int>(chars.size()))
        throw usage_error("--chi index out of range (phi(q) = " +
                          std::to_string(chars.size()) + ")");
    return chars[static_cast<std::size_t>(idx)];
}

json complex_json(Complex v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json result_json(const EvalResult& r) {
    return json{{"value", complex_json(r.value)}, {"method", r.method}, {"err_est", r.err_est}};
}

json scalar_json(Complex v, const std::string& method) {
    return json{{"value", complex_json(v)}, {"method", method}, {"err_est", 0.0}};
}

using Handler = std::function<json(const EvalRequest&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = [] {
        std::map<std::string, Handler> h;

        // series_core
        h["series.modulator"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            return scalar_json(eval_modulator(f, need_complex(r.params, "t")), "modulator");
        };
        h["series.seed"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            return scalar_json(eval_seed(f, need_complex(r.params, "t")), "seed");
        };
        h["series.parity"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            Parity p = detect_parity(f);
            std::string name = p == Parity::Even ? "Even" : p == Parity::Odd ? "Odd" : "None";
            return json{{"value", name}, {"method", "p-number-scan"}, {"err_est", 0.0}};
        };
        h["series.constants"] = [](const EvalRequest& r) {
            StructuralConstants sc = structural_constants(seed_from_params(r.params));
            return json{{"value", {{"r_f", sc.r_f}, {"n_f", sc.n_f}, {"m_f", sc.m_f}}},
                        {"method", "floor-arithmetic"},
                        {"err_est", 0.0}};
        };
        h["series.p_coeff"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            return scalar_json(f.p(need_int(r.params, "n")), "p-stream");
        };
        h["series.c_coeff"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            return scalar_json(f.c(need_int(r.params, "n")), "c-stream");
        };
        h["series.c_polynomial"] = [](const EvalRequest& r) {
            Polynomial poly = c_polynomial(seed_from_params(r.params), need_int(r.params, "n"));
            json coeffs = json::array();
            for (const auto& c : poly.coeffs())
                coeffs.push_back(complex_json(c));
            return json{{"value", coeffs}, {"method", "binomial-convolution"}, {"err_est", 0.0}};
        };

        // gen_exp
        h["genexp.pow"] = [](const EvalRequest& r) {
            SeriesFunction f = seed_from_params(r.params);
            return result_json(generalized_pow(need_complex(r.params, "z"),
                                               need_complex(r.params, "s"), f, r.tol));
        };

        // lc_fc
        h["lc.series"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return result_json(lc_series(ev, need_complex(r.params, "s"), r.tol));
        };
        h["lc.integral"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return result_json(lc_integral(ev, need_complex(r.params, "s")));
        };
        h["lc.at_nonpositive"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return scalar_json(lc_at_nonpositive_int(ev, need_int(r.params, "p")),
                               "c-polynomial");
        };
        h["lc.residue"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return scalar_json(residue_at_one(ev), "p0");
        };
        h["lc.fc_positive"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return scalar_json(fc_at_positive_int(ev, need_int(r.params, "k")),
                               "c-polynomial");
        };
        h["lc.fc_left"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            return result_json(fc_left_halfplane(ev, need_complex(r.params, "s"), r.tol));
        };
        h["lc.feq_residual"] = [](const EvalRequest& r) {
            LcEvaluator ev(seed_from_params(r.params));
            double res = functional_equation_residual(ev, need_complex(r.params, "s"), r.tol);
            return json{{"value", res}, {"method", "functional-equation"}, {"err_est", 0.0}};
        };

        // numerics
        h["numerics.gamma"] = [](const EvalRequest& r) {
            return scalar_json(gamma_complex(need_complex(r.params, "s")), "lanczos");
        };
        h["numerics.bernoulli"] = [](const EvalRequest& r) {
            auto b = bernoulli_numbers(need_int(r.params, "n"));
            return json{{"value", b}, {"method", "recurrence"}, {"err_est", 0.0}};
        };
        h["numerics.hurwitz"] = [](const EvalRequest& r) {
            return result_json(
                hurwitz_zeta(need_complex(r.params, "s"), need_complex(r.params, "a")));
        };
        h["numerics.periodic_zeta"] = [](const EvalRequest& r) {
            return result_json(
                periodic_zeta(need_double(r.params, "a"), need_complex(r.params, "s")));
        };

        // eulerian
        h["eulerian.polynomial"] = [](const EvalRequest& r) {
            const auto& row = eulerian_polynomial(need_int(r.params, "n"));
            json coeffs = json::array();
            if (row.is_exact())
                for (auto v : row.exact)
                    coeffs.push_back(v);
            else
                for (auto v : row.coeffs)
                    coeffs.push_back(v);
            return json{{"value", coeffs},
                        {"method", row.is_exact() ? "recurrence-exact" : "recurrence-f64"},
                        {"err_est", 0.0}};
        };
        h["eulerian.number"] = [](const EvalRequest& r) {
            return json{{"value", eulerian_number(need_int(r.params, "n"), need_int(r.params, "k"))},
                        {"method", "recurrence"},
                        {"err_est", 0.0}};
        };
        h["eulerian.k"] = [](const EvalRequest& r) {
            return scalar_json(k_function(need_int(r.params, "m"), need_complex(r.params, "z")),
                               "eulerian-closed-form");
        };
        h["eulerian.cot_derivative"] = [](const EvalRequest& r) {
            std::string form = opt_string(r.params, "form", "k");
            CotForm cf = form == "trig" ? CotForm::Trig : CotForm::K;
            return scalar_json(
                cot_derivative(need_int(r.params, "p"), need_complex(r.params, "w"), cf),
                form == "trig" ? "trig-closed-form" : "k-function");
        };
        h["eulerian.partial_fraction"] = [](const EvalRequest& r) {
            return result_json(partial_fraction_sum(need_int(r.params, "p"),
                                                    need_complex(r.params, "w"),
                                                    need_long(r.params, "N")));
        };

        // worked examples
        h["examples.l_even"] = [](const EvalRequest& r) {
            return scalar_json(l_even_closed(need_int(r.params, "p"), need_complex(r.params, "w")),
                               "closed-form");
        };
        h["examples.l_odd"] = [](const EvalRequest& r) {
            return scalar_json(l_odd_closed(need_int(r.params, "p"), need_complex(r.params, "w")),
                               "closed-form");
        };
        h["examples.int_cos"] = [](const EvalRequest& r) {
            return scalar_json(
                integral_cos_closed(need_int(r.params, "p"), need_complex(r.params, "w")),
                "closed-form");
        };
        h["examples.int_sinh"] = [](const EvalRequest& r) {
            return scalar_json(
                integral_sinh_closed(need_int(r.params, "p"), need_complex(r.params, "w")),
                "closed-form");
        };

        // dirichlet
        h["dirichlet.characters"] = [](const EvalRequest& r) {
            auto chars = characters_mod(need_int(r.params, "q"));
            json arr = json::array();
            for (const auto& chi : chars)
                arr.push_back(json::parse(character_to_json(chi)));
            return json{{"value", arr}, {"method", "crt-construction"}, {"err_est", 0.0}};
        };
        h["dirichlet.conductor"] = [](const EvalRequest& r) {
            return json{{"value", character_from_params(r.params).conductor()},
                        {"method", "divisor-scan"},
                        {"err_est", 0.0}};
        };
        h["dirichlet.gauss_sum"] = [](const EvalRequest& r) {
            return scalar_json(
                gauss_sum(need_complex(r.params, "alpha"), character_from_params(r.params)),
                "direct-sum");
        };
        h["dirichlet.l_series"] = [](const EvalRequest& r) {
            return result_json(l_series(need_complex(r.params, "s"),
                                        character_from_params(r.params), r.tol));
        };
        h["dirichlet.l_hurwitz"] = [](const EvalRequest& r) {
            return result_json(
                l_via_hurwitz(need_complex(r.params, "s"), character_from_params(r.params)));
        };
        h["dirichlet.l_cot"] = [](const EvalRequest& r) {
            return scalar_json(
                l_value_cot(need_int(r.params, "k"), character_from_params(r.params)),
                "cotangent-closed-form");
        };
        h["dirichlet.l_alkan"] = [](const EvalRequest& r) {
            return scalar_json(
                l_value_alkan(need_int(r.params, "k"), character_from_params(r.params)),
                "gauss-bernoulli-double-sum");
        };
        h["dirichlet.l_classical"] = [](const EvalRequest& r) {
            std::string mode = opt_string(r.params, "mode", "unified");
            ClassicalForm form =
                mode == "per-parity" ? ClassicalForm::PerParity : ClassicalForm::Unified;
            return scalar_json(
                l_value_classical(need_int(r.params, "k"), character_from_params(r.params), form),
                mode);
        };
        h["dirichlet.gen_bernoulli"] = [](const EvalRequest& r) {
            return scalar_json(
                generalized_bernoulli(need_int(r.params, "n"), character_from_params(r.params)),
                "bernoulli-polynomial-sum");
        };
        h["dirichlet.feq_residual"] = [](const EvalRequest& r) {
            double res = dirichlet_functional_residual(need_complex(r.params, "s"),
                                                       character_from_params(r.params), r.tol);
            return json{{"value", res}, {"method", "functional-equation"}, {"err_est", 0.0}};
        };

        return h;
    }();
    return table;
}

} // namespace

std::vector<std::string> eval_targets() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : handlers()) {
        (void)fn;
        names.push_back(name);
    }
    return names;
}

std::string run_eval_json(const EvalRequest& req) {
    auto it = handlers().find(req.target);
    if (it == handlers().end())
        throw usage_error("unknown target '" + req.target + "'");
    json payload = it->second(req);
    json record;
    record["target"] = req.target;
    record["params"] = json::object();
    for (const auto& [key, value] : req.params)
        record["params"][key] = value;
    for (auto& [key, value] : payload.items())
        record[key] = value;
    return record.dump();
}

std::string run_table_csv(const std::string& kind, const Params& params) {
    std::ostringstream os;
    if (kind == "eulerian") {
        int rows = need_int(params, "rows");
        if (rows < 1 || rows > 30)
            throw usage_error("table eulerian: --rows out of [1, 30]");
        os << "n";
        for (int k = 0; k < rows; ++k)
            os << ",c" << k;
        os << "\n";
        for (int n = 1; n <= rows; ++n) {
            const auto& row = eulerian_polynomial(n);
            os << n;
            for (int k = 0; k < rows; ++k) {
                os << ",";
                if (k < static_cast<int>(row.coeffs.size())) {
                    if (row.is_exact())
                        os << row.exact[static_cast<std::size_t>(k)];
                    else
                        os << fmt17(row.coeffs[static_cast<std::size_t>(k)]);
                }
            }
            os << "\n";
        }
        return os.str();
    }
    if (kind == "bernoulli") {
        int n = need_int(params, "n");
        if (n < 0 || n > 60)
            throw usage_error("table bernoulli: --n out of [0, 60]");
        auto b = bernoulli_numbers(n);
        os << "n,value\n";
        for (int k = 0; k <= n; ++k)
            os << k << "," << fmt17(b[static_cast<std::size_t>(k)]) << "\n";
        return os.str();
    }
    if (kind == "lc_values") {
        SeriesFunction f = seed_from_params(params);
        LcEvaluator ev(std::move(f));
        double smin = need_double(params, "s-min");
        double smax = need_double(params, "s-max");
        double step = opt_double(params, "s-step", 0.5);
        if (step <= 0.0 || smax < smin || (smax - smin) / step > 1000)
            throw usage_error("table lc_values: bad s range");
        os << "s,re,im,method,err_est\n";
        for (double s = smin; s <= smax + 1e-12; s += step) {
            EvalResult r = lc_series(ev, Complex(s));
            os << fmt17(s) << "," << fmt17(r.value.real()) << "," << fmt17(r.value.imag()) << ","
               << r.method << "," << fmt17(r.err_est) << "\n";
        }
        return os.str();
    }
    if (kind == "characters") {
        int q = need_int(params, "q");
        if (q < 1 || q > 10000)
            throw usage_error("table characters: --q out of [1, 10^4]");
        auto chars = characters_mod(q);
        os << "q,index,conductor,parity,json\n";
        for (std::size_t i = 0; i < chars.size(); ++i) {
            std::string record = character_to_json(chars[i]);
            std::string quoted;
            for (char c : record) { // CSV-escape embedded quotes
                quoted += c;
                if (c == '"')
                    quoted += '"';
            }
            os << q << "," << i << "," << chars[i].conductor() << "," << chars[i].parity() << ",\""
               << quoted << "\"\n";
        }
        return os.str();
    }
    throw usage_error("unknown table kind '" + kind + "'");
}

} // namespace lcfn
