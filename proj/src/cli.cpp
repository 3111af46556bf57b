#include "volterra/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "volterra/charge.hpp"
#include "volterra/convolve.hpp"
#include "volterra/csv.hpp"
#include "volterra/errors.hpp"
#include "volterra/kernel.hpp"
#include "volterra/verify.hpp"

namespace volterra::cli {

namespace {

struct Config {
    std::string kernel = "volterra-i";
    double alpha = 0.5;
    double T = 1.0;
    std::size_t n = 2048;
    double tol = kDefaultTolerance;
    double solve_tol = 1e-8;
    std::uint64_t seed = kDefaultSeed;
    std::string input;
    std::string output;
    std::string check = "all";
    std::vector<double> xs;
    double strength = 0.0;
    double sigma = 1.0;
    std::string kind = "linear";
    std::size_t max_iter = 100;
    std::string format = "text";
    double exponent = 0.0;
};

Kernel make_kernel(const Config& c)
{
    if (!(c.tol > 0.0 && c.tol <= 1e-2))
        throw UsageError("--tol must lie in (0, 1e-2]");
    if (c.kernel == "volterra-i")
        return Kernel::volterra(c.tol);
    if (c.kernel == "abel")
        return Kernel::abel(c.alpha, c.tol);
    if (c.kernel == "log-sonine")
        return Kernel::log_sonine();
    throw UsageError("unknown kernel '" + c.kernel + "'");
}

// Output goes to --output when given, else to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot write '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

int do_eval(const Config& c, std::ostream& out)
{
    const Kernel k = make_kernel(c);
    if (c.xs.empty())
        throw UsageError("eval needs --x");
    Sink sink(c.output, out);
    auto& os = sink.get();
    os << "x,value,N,M\n";
    for (double x : c.xs)
        os << format_double(x) << ',' << format_double(k.value(x)) << ',' << format_double(k.integral(x)) << ','
           << format_double(k.first_moment(x)) << '\n';
    return 0;
}

int do_convolve(const Config& c, std::ostream& out)
{
    const Kernel k = make_kernel(c);
    if (c.input.empty())
        throw UsageError("convolve needs --input");
    const auto table = read_samples_file(c.input);
    Sink sink(c.output, out);
    const bool phi = k.kind() == KernelKind::log_sonine;
    std::visit(
        [&](const auto& g) {
            if (g.cells() < 8)
                throw UsageError("input needs at least 8 cells");
            write_samples(sink.get(), phi ? apply_Phi(g) : apply_Jnu(k, g));
        },
        table);
    return 0;
}

int do_solve(const Config& c, std::ostream& out, std::ostream& err)
{
    if (c.input.empty())
        throw UsageError("solve-charge needs --input");
    if (!(c.solve_tol > 0.0))
        throw UsageError("--tol must be positive");
    const auto table = read_samples_file(c.input);
    ComplexSamples f = std::visit(
        [](const auto& g) {
            std::vector<std::complex<double>> z(g.values().begin(), g.values().end());
            return ComplexSamples(g.length(), std::move(z));
        },
        table);
    if (f.cells() < 8)
        throw UsageError("forcing needs at least 8 cells");
    SolveReport rep = [&] {
        if (c.kind == "linear")
            return solve_linear_charge(ChargeProblem::linear(c.strength, f), c.solve_tol);
        if (c.kind == "nonlinear")
            return solve_nonlinear_charge(ChargeProblem::nonlinear(c.strength, c.sigma, f), c.solve_tol,
                                          c.max_iter);
        throw UsageError("--kind must be linear or nonlinear");
    }();
    Sink sink(c.output, out);
    write_samples(sink.get(), rep.solution);
    std::ostream& summary = sink.to_file() ? out : err;
    summary << "residual\t" << format_double(rep.residual) << "\niterations\t" << rep.iterations << '\n';
    return 0;
}

int do_verify(const Config& c, std::ostream& out)
{
    CheckOptions opt;
    opt.kernel = make_kernel(c);
    opt.n = c.n;
    opt.T = c.T;
    opt.seed = c.seed;
    opt.exponent = c.exponent;
    if (c.n < 8)
        throw UsageError("--n must be at least 8");
    if (!(c.T > 0.0))
        throw UsageError("--T must be positive");
    if (c.format != "text" && c.format != "csv")
        throw UsageError("--format must be text or csv");
    std::vector<std::string> names;
    if (c.check == "all")
        names = check_names();
    else
        names.push_back(c.check);
    bool failed = false;
    std::vector<VerificationReport> reports;
    for (const auto& name : names) {
        reports.push_back(run_check(name, opt));
        failed = failed || reports.back().verdict == Verdict::fail;
    }
    Sink sink(c.output, out);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (c.format == "text") {
            sink.get() << reports[i].text();
        } else {
            std::string body = reports[i].csv();
            if (i > 0)
                body.erase(0, body.find('\n') + 1); // one header for the whole file
            sink.get() << body;
        }
    }
    return failed ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Singular Volterra convolution toolkit"};
    app.require_subcommand(1);

    auto kernel_opts = [&](CLI::App* sub) {
        sub->add_option("--kernel", c.kernel, "volterra-i | abel | log-sonine")
            ->check(CLI::IsMember({"volterra-i", "abel", "log-sonine"}));
        sub->add_option("--alpha", c.alpha, "Abel exponent in (0,1)");
        sub->add_option("--tol", c.tol, "relative tolerance");
        sub->add_option("--output", c.output, "output path (default: standard output)");
    };

    auto* eval = app.add_subcommand("eval", "print nu, N and M at the given points");
    kernel_opts(eval);
    eval->add_option("--x", c.xs, "evaluation points")->required();

    auto* conv = app.add_subcommand("convolve", "apply J_nu to a sampled function");
    kernel_opts(conv);
    conv->add_option("--input", c.input, "CSV with x,value or x,re,im")->required();

    auto* solve = app.add_subcommand("solve-charge", "solve the (non)linear charge equation");
    solve->add_option("--input", c.input, "forcing CSV")->required();
    solve->add_option("--kind", c.kind, "linear | nonlinear")->check(CLI::IsMember({"linear", "nonlinear"}));
    solve->add_option("--strength", c.strength, "alpha (linear) or alpha0 (nonlinear)");
    solve->add_option("--sigma", c.sigma, "nonlinearity exponent");
    solve->add_option("--tol", c.solve_tol, "residual tolerance");
    solve->add_option("--max-iter", c.max_iter, "per-step iteration cap");
    solve->add_option("--output", c.output, "output path (default: standard output)");

    auto* ver = app.add_subcommand("verify", "run verification checks");
    kernel_opts(ver);
    ver->add_option("--check", c.check, "check name or 'all'");
    ver->add_option("--n", c.n, "grid cells");
    ver->add_option("--T", c.T, "interval length");
    ver->add_option("--seed", c.seed, "PRNG seed");
    ver->add_option("--exponent", c.exponent, "Holder alpha or Sobolev theta");
    ver->add_option("--format", c.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*eval)
            return do_eval(c, out);
        if (*conv)
            return do_convolve(c, out);
        if (*solve)
            return do_solve(c, out, err);
        return do_verify(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return 1;
    }
}

} // namespace volterra::cli
