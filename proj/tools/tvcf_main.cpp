#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tvcf/accel.hpp"
#include "tvcf/gallery.hpp"
#include "tvcf/validation.hpp"

using nlohmann::json;
using namespace tvcf;

namespace {

// Complex CLI literal: "a+bi" with no spaces; each component is a decimal,
// scientific or exact rational "p/q" literal.
Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
    if (text.empty()) throw DomainError("empty numeric literal");
    std::string s = text;
    auto parse_part = [&](std::string part, bool imag) {
        if (imag) {
            if (part == "+" || part.empty()) part = "1";
            else if (part == "-") part = "-1";
        }
        return ctx.real(part);
    };
    // split point: '+'/'-' that is neither leading nor an exponent sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // keep the last one: handles "-1.5+0.01i"
    }
    if (s.back() == 'i') {
        s.pop_back();
        if (split == std::string::npos)
            return Complex(ctx.real(0), parse_part(s, true));
        return Complex(parse_part(s.substr(0, split), false),
                       parse_part(s.substr(split), true));
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw DomainError("cannot parse complex literal: " + text);
    return Complex(parse_part(s, false), ctx.real(0));
}

json complex_json(const Complex& z) {
    return json::array({z.re().str(), z.im().str()});
}

struct InputSpec {
    std::vector<std::string> positionals;  // gallery id + k=v params
    std::string input_file;
};

struct ResolvedInput {
    TwoVariantCF cf;
    std::optional<std::string> gallery_id;
    ParamMap params;
};

ResolvedInput resolve_input(const InputSpec& in, const PrecisionContext& ctx) {
    if (!in.input_file.empty()) {
        std::ifstream f(in.input_file);
        if (!f) throw DomainError("cannot open input file " + in.input_file);
        std::stringstream buf;
        buf << f.rdbuf();
        return ResolvedInput{TwoVariantCF::from_json(buf.str(), ctx), std::nullopt, {}};
    }
    if (in.positionals.empty())
        throw DomainError("need a gallery id with k=v parameters or --input FILE");
    const std::string& id = in.positionals.front();
    ParamMap params;
    for (size_t i = 1; i < in.positionals.size(); ++i) {
        const std::string& kv = in.positionals[i];
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw DomainError("parameter must be key=value, got '" + kv + "'");
        params.emplace(kv.substr(0, eq), parse_complex(kv.substr(eq + 1), ctx));
    }
    return ResolvedInput{gallery_entry(id).builder(params, ctx), id, params};
}

std::optional<Complex> resolve_reference(const std::string& spec, const ResolvedInput& input,
                                         const PrecisionContext& ctx) {
    if (spec.empty() || spec == "none") return std::nullopt;
    if (spec == "oracle") {
        if (!input.gallery_id)
            throw DomainError("--reference oracle requires a gallery input");
        return gallery_oracle(*input.gallery_id, input.params, ctx);
    }
    if (spec.rfind("literal:", 0) == 0) return parse_complex(spec.substr(8), ctx);
    throw DomainError("reference must be none, oracle or literal:VALUE");
}

json tag_json(const SubclassTag& tag) {
    json j;
    j["tag"] = subclass_name(tag.cls);
    if (tag.witness) j["witness"] = complex_json(*tag.witness);
    if (tag.discriminant) j["discriminant"] = complex_json(*tag.discriminant);
    if (tag.roots)
        j["roots"] = json::array({complex_json(tag.roots->first), complex_json(tag.roots->second)});
    return j;
}

json model_json(const TailModel& model) {
    json j;
    j["mu"] = model.mu;
    j["m"] = model.m;
    j["theta"] = model.theta;
    j["alpha"] = complex_json(model.alpha);
    j["beta"] = complex_json(model.beta);
    j["gamma"] = complex_json(model.gamma);
    json taus = json::object();
    for (const auto& [k, v] : model.tau) taus[std::to_string(k)] = complex_json(v);
    j["tau"] = taus;
    return j;
}

int emit_error(const Error& e) {
    json j;
    j["schema"] = "tvcf/1";
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << j.dump(2) << std::endl;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-variant continued fraction evaluation and convergence acceleration"};
    app.require_subcommand(1);

    int digits = 128;
    if (const char* env = std::getenv("TVCF_DIGITS")) digits = std::atoi(env);
    app.add_option("--digits", digits, "working precision in decimal digits")
        ->capture_default_str();
    std::string format = "json";
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    InputSpec input;
    std::string reference_spec = "none";
    long n_index = 0, rows = 0, iters = -1;
    int decimals = 2;
    bool with_tail = false, dump_cf = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("spec", input.positionals, "gallery id followed by k=v parameters");
        cmd->add_option("--input", input.input_file, "TVCF JSON file");
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "subclass of a CF");
    cmd_classify->fallthrough();
    add_input(cmd_classify);
    cmd_classify->add_flag("--with-tail", with_tail, "include the tail model");
    cmd_classify->add_flag("--dump-cf", dump_cf, "include the serialized CF");

    CLI::App* cmd_eval = app.add_subcommand("eval", "classical approximant S_n(0)");
    cmd_eval->fallthrough();
    add_input(cmd_eval);
    cmd_eval->add_option("--n", n_index, "approximant index")->required();
    cmd_eval->add_option("--reference", reference_spec, "none|oracle|literal:VALUE");

    CLI::App* cmd_accel = app.add_subcommand("accelerate", "accelerated value estimate");
    cmd_accel->fallthrough();
    add_input(cmd_accel);
    cmd_accel->add_option("--rows", rows, "initial approximants N")->required();
    cmd_accel->add_option("--iters", iters, "iterations J")->required();
    cmd_accel->add_option("--reference", reference_spec, "none|oracle|literal:VALUE");

    CLI::App* cmd_table = app.add_subcommand("table", "triangular accuracy table");
    cmd_table->fallthrough();
    add_input(cmd_table);
    cmd_table->add_option("--rows", rows, "initial approximants N")->required();
    cmd_table->add_option("--iters", iters, "iterations J")->required();
    cmd_table->add_option("--reference", reference_spec, "oracle|literal:VALUE")->required();
    cmd_table->add_option("--decimals", decimals, "display decimals")->capture_default_str();

    CLI::App* cmd_gallery = app.add_subcommand("gallery", "built-in CF instances");
    cmd_gallery->fallthrough();
    CLI::App* cmd_gallery_list = cmd_gallery->add_subcommand("list", "list entries");
    cmd_gallery_list->fallthrough();
    CLI::App* cmd_gallery_eval = cmd_gallery->add_subcommand("eval", "oracle value");
    cmd_gallery_eval->fallthrough();
    cmd_gallery_eval->add_option("spec", input.positionals, "id followed by k=v parameters");

    CLI::App* cmd_verify = app.add_subcommand("verify", "residual/branch/order suite");
    cmd_verify->fallthrough();
    add_input(cmd_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        PrecisionContext ctx(digits);

        if (cmd_gallery->parsed()) {
            if (cmd_gallery_list->parsed()) {
                json out;
                out["schema"] = "tvcf/1";
                json arr = json::array();
                for (const auto& e : gallery()) {
                    json je;
                    je["id"] = e.id;
                    je["params"] = e.params;
                    je["description"] = e.description;
                    arr.push_back(je);
                }
                out["entries"] = arr;
                std::cout << out.dump(2) << std::endl;
                return 0;
            }
            if (cmd_gallery_eval->parsed()) {
                ResolvedInput in = resolve_input(input, ctx);
                Complex v = gallery_oracle(*in.gallery_id, in.params, ctx);
                json out;
                out["schema"] = "tvcf/1";
                out["value"] = complex_json(v);
                out["digits"] = digits;
                std::cout << out.dump(2) << std::endl;
                return 0;
            }
            throw DomainError("gallery needs a subcommand: list or eval");
        }

        ResolvedInput in = resolve_input(input, ctx);

        if (cmd_classify->parsed()) {
            ShiftedCoeffs sc = shifted_coeffs(in.cf);
            SubclassTag tag = classify(sc, ctx);
            json out = tag_json(tag);
            out["schema"] = "tvcf/1";
            out["digits"] = digits;
            if (with_tail) out["tail_model"] = model_json(initial_tail(tag, sc, ctx));
            if (dump_cf) out["cf"] = json::parse(in.cf.to_json());
            std::cout << out.dump(2) << std::endl;
            return 0;
        }

        if (cmd_eval->parsed()) {
            Complex v = classical_approximant(in.cf, n_index, ctx);
            json out;
            out["schema"] = "tvcf/1";
            out["value"] = complex_json(v);
            out["n"] = n_index;
            out["digits"] = digits;
            if (auto ref = resolve_reference(reference_spec, in, ctx))
                out["acc"] = acc(v, *ref, ctx).str_fixed(2);
            std::cout << out.dump(2) << std::endl;
            return 0;
        }

        if (cmd_accel->parsed()) {
            auto ref = resolve_reference(reference_spec, in, ctx);
            AccelResult result = accelerate(in.cf, rows, iters, ctx, ref);
            json out;
            out["schema"] = "tvcf/1";
            out["value"] = complex_json(result.value);
            out["N"] = rows;
            out["J"] = iters;
            out["digits"] = digits;
            if (ref) out["acc"] = acc(result.value, *ref, ctx).str_fixed(2);
            std::cout << out.dump(2) << std::endl;
            return 0;
        }

        if (cmd_table->parsed()) {
            auto ref = resolve_reference(reference_spec, in, ctx);
            if (!ref) throw DomainError("table requires a resolvable reference");
            AccelResult result = accelerate(in.cf, rows, iters, ctx, ref);
            const auto& delta = *result.delta;
            if (format == "csv") {
                std::cout << "n,j,delta\n";
                for (long n = 1; n <= rows; ++n)
                    for (size_t j = 0; j < delta.size(); ++j)
                        if (static_cast<size_t>(n) <= delta[j].size())
                            std::cout << n << "," << j << ","
                                      << delta[j][static_cast<size_t>(n - 1)].str_fixed(decimals)
                                      << "\n";
                return 0;
            }
            json cells = json::array();
            for (long n = 1; n <= rows; ++n)
                for (size_t j = 0; j < delta.size(); ++j)
                    if (static_cast<size_t>(n) <= delta[j].size()) {
                        const Real& d = delta[j][static_cast<size_t>(n - 1)];
                        cells.push_back({{"n", n},
                                         {"j", j},
                                         {"delta", d.str()},
                                         {"display", d.str_fixed(decimals)}});
                    }
            json out;
            out["schema"] = "tvcf/1";
            out["N"] = rows;
            out["J"] = iters;
            out["digits"] = digits;
            out["reference"] = complex_json(*ref);
            out["value"] = complex_json(result.value);
            out["cells"] = cells;
            std::cout << out.dump(2) << std::endl;
            return 0;
        }

        if (cmd_verify->parsed()) {
            auto checks = run_verification(in.cf, ctx);
            bool all = true;
            json arr = json::array();
            for (const auto& c : checks) {
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all = all && c.pass;
            }
            json out;
            out["schema"] = "tvcf/1";
            out["digits"] = digits;
            out["checks"] = arr;
            out["pass"] = all;
            std::cout << out.dump(2) << std::endl;
            return 0;
        }

        throw DomainError("no command executed");
    } catch (const Error& e) {
        return emit_error(e);
    } catch (const std::exception& e) {
        return emit_error(Error("INTERNAL", e.what()));
    }
}
