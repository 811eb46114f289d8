#include "thmat/cli.hpp"

#include <CLI11.hpp>

#include <random>
#include <sstream>

#include "thmat/annihilator.hpp"
#include "thmat/bench.hpp"
#include "thmat/error.hpp"
#include "thmat/formats.hpp"
#include "thmat/oracle.hpp"
#include "thmat/selftest.hpp"

namespace thmat::cli {

namespace {

struct SeedOption {
  std::uint64_t value = 0;
  CLI::Option* opt = nullptr;

  // Explicit --seed, or fresh entropy announced on the error stream.
  std::uint64_t resolve(std::ostream& err) const {
    if (opt && opt->count() > 0) return value;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed=" << s << '\n';
    return s;
  }
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    formats::write_file(path, text);
}

template <typename T>
std::vector<T> split_list(const std::string& s) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw Error(Errc::InvalidArgument, "bad list item '" + item + "'");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annihilating polynomials of Toeplitz+Hankel-like matrices over prime fields", "thmat"};
  app.require_subcommand(1);

  // gen
  std::size_t gen_n = 0, gen_at = 0, gen_ah = 0;
  std::uint64_t gen_p = PrimeField::kDefaultModulus;
  std::string gen_out;
  SeedOption gen_seed;
  auto* gen = app.add_subcommand("gen", "Write a random structured matrix (SMX)");
  gen->add_option("--n", gen_n, "Dimension")->required();
  gen->add_option("--alpha-t", gen_at, "Toeplitz-part generator width");
  gen->add_option("--alpha-h", gen_ah, "Hankel-part generator width");
  gen->add_option("--p", gen_p, "Prime modulus");
  gen_seed.opt = gen->add_option("--seed", gen_seed.value, "Random seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // minpoly
  std::string mp_in, mp_mode = "bsgs";
  std::size_t mp_trials = 2;
  SeedOption mp_seed;
  auto* mp = app.add_subcommand("minpoly", "Monte Carlo minimal polynomial of an SMX matrix");
  mp->add_option("input", mp_in, "SMX file")->required();
  mp->add_option("--mode", mp_mode, "Sequence schedule")->check(CLI::IsMember({"naive", "bsgs"}));
  mp->add_option("--trials", mp_trials, "Verification trials")->check(CLI::PositiveNumber);
  mp_seed.opt = mp->add_option("--seed", mp_seed.value, "Random seed");

  // charpoly
  std::string cp_in;
  std::size_t cp_beta = 1, cp_retries = 3;
  SeedOption cp_seed;
  auto* cp = app.add_subcommand("charpoly", "Block Wiedemann characteristic polynomial of an SMX matrix");
  cp->add_option("input", cp_in, "SMX file")->required();
  cp->add_option("--beta", cp_beta, "Initial block size")->check(CLI::PositiveNumber);
  cp->add_option("--retries", cp_retries, "Attempts before giving up")->check(CLI::PositiveNumber);
  cp_seed.opt = cp->add_option("--seed", cp_seed.value, "Random seed");

  // verify
  std::string vf_in, vf_poly;
  std::size_t vf_trials = 3;
  SeedOption vf_seed;
  auto* vf = app.add_subcommand("verify", "Check that a polynomial annihilates an SMX matrix");
  vf->add_option("input", vf_in, "SMX file")->required();
  vf->add_option("poly", vf_poly, "Polynomial file (one line, low to high)")->required();
  vf->add_option("--trials", vf_trials, "Random trials")->check(CLI::PositiveNumber);
  vf_seed.opt = vf->add_option("--seed", vf_seed.value, "Random seed");

  // reconstruct
  std::string rc_in, rc_out;
  auto* rc = app.add_subcommand("reconstruct", "Expand an SMX matrix to DMX");
  rc->add_option("input", rc_in, "SMX file")->required();
  rc->add_option("--out", rc_out, "Output path (default stdout)");

  // oracles
  std::string om_in, oc_in, or_in, or_op = "down";
  auto* om = app.add_subcommand("oracle-minpoly", "Dense minimal polynomial of a DMX matrix");
  om->add_option("input", om_in, "DMX file")->required();
  auto* oc = app.add_subcommand("oracle-charpoly", "Dense characteristic polynomial of a DMX matrix");
  oc->add_option("input", oc_in, "DMX file")->required();
  auto* orank = app.add_subcommand("oracle-rank", "Displacement rank of a DMX matrix");
  orank->add_option("input", or_in, "DMX file")->required();
  orank->add_option("--op", or_op, "Stein operator")->check(CLI::IsMember({"down", "up"}));

  // bench
  std::string bn_sizes, bn_algos = "minpoly-bsgs", bn_seeds = "1", bn_out;
  bench::BenchConfig bn_cfg;
  auto* bn = app.add_subcommand("bench", "Count field multiplications over a size grid (CSV)");
  bn->add_option("--sizes", bn_sizes, "Comma-separated dimensions")->required();
  bn->add_option("--algorithms", bn_algos, "Comma-separated algorithm labels");
  bn->add_option("--seeds", bn_seeds, "Comma-separated seeds");
  bn->add_option("--alpha-t", bn_cfg.alpha_t, "Toeplitz-part width");
  bn->add_option("--alpha-h", bn_cfg.alpha_h, "Hankel-part width");
  bn->add_option("--beta", bn_cfg.beta, "Block size for charpoly-block");
  bn->add_option("--p", bn_cfg.modulus, "Prime modulus");
  bn->add_option("--out", bn_out, "Output CSV path (default stdout)");

  // selftest
  std::uint64_t st_p = PrimeField::kDefaultModulus;
  auto* st = app.add_subcommand("selftest", "Run the reduced invariant suite");
  st->add_option("--p", st_p, "Prime modulus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      const PrimeField f(gen_p);
      emit(out, gen_out, formats::write_smx(random_structured(gen_n, gen_at, gen_ah, f, gen_seed.resolve(err))));
      return kOk;
    }
    if (*mp) {
      const THMatrix a = formats::read_smx(formats::read_file(mp_in));
      const auto mode = mp_mode == "naive" ? SequenceMode::Naive : SequenceMode::Bsgs;
      const AnnihilatorReport rep = minpoly(a, mp_seed.resolve(err), mode, mp_trials);
      out << formats::write_poly_line(rep.polynomial) << '\n'
          << "verified=" << (rep.verified ? "true" : "false") << " mults=" << rep.field_mult_count << '\n';
      return rep.verified ? kOk : kRejected;
    }
    if (*cp) {
      const THMatrix a = formats::read_smx(formats::read_file(cp_in));
      const std::uint64_t seed = cp_seed.resolve(err);
      const std::size_t n = a.n();
      std::optional<NotGenericError> last;
      // Fresh seed per attempt; the block size doubles and the last attempt
      // uses beta = n.
      for (std::size_t k = 0; k < cp_retries; ++k) {
        std::size_t beta = std::min(n, cp_beta << std::min<std::size_t>(k, 20));
        if (k + 1 == cp_retries && k > 0) beta = n;
        try {
          const AnnihilatorReport rep = charpoly_generic(a, beta, seed + k);
          out << formats::write_poly_line(rep.polynomial) << '\n'
              << "verified=true mults=" << rep.field_mult_count << " beta=" << beta
              << " seed=" << seed + k << '\n';
          return kOk;
        } catch (const NotGenericError& e) {
          last = e;
        }
      }
      out << "not-generic degree=" << last->found_degree() << '\n'
          << "partial: " << formats::write_poly_line(last->partial()) << '\n';
      return kNotGeneric;
    }
    if (*vf) {
      const THMatrix a = formats::read_smx(formats::read_file(vf_in));
      const std::string text = formats::read_file(vf_poly);
      const Poly f = formats::read_poly_line(a.field(), text.substr(0, text.find('\n')));
      const bool ok = verify_annihilates(a, f, vf_trials, vf_seed.resolve(err));
      out << (ok ? "accept" : "reject") << '\n';
      return ok ? kOk : kRejected;
    }
    if (*rc) {
      emit(out, rc_out, formats::write_dmx(reconstruct(formats::read_smx(formats::read_file(rc_in)))));
      return kOk;
    }
    if (*om) {
      out << formats::write_poly_line(oracle::dense_minpoly(formats::read_dmx(formats::read_file(om_in)))) << '\n';
      return kOk;
    }
    if (*oc) {
      out << formats::write_poly_line(oracle::dense_charpoly(formats::read_dmx(formats::read_file(oc_in)))) << '\n';
      return kOk;
    }
    if (*orank) {
      const auto tag = or_op == "up" ? OperatorTag::Up : OperatorTag::Down;
      out << oracle::displacement_rank(formats::read_dmx(formats::read_file(or_in)), tag) << '\n';
      return kOk;
    }
    if (*bn) {
      bn_cfg.sizes = split_list<std::size_t>(bn_sizes);
      bn_cfg.seeds = split_list<std::uint64_t>(bn_seeds);
      bn_cfg.algorithms.clear();
      std::stringstream ss(bn_algos);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto a = bench::parse_algorithm(item);
        if (!a) throw Error(Errc::InvalidArgument, "unknown algorithm '" + item + "'");
        bn_cfg.algorithms.push_back(*a);
      }
      const auto rows = bench::run_bench(bn_cfg);
      emit(out, bn_out, bench::to_csv(rows));
      return kOk;
    }
    if (*st) return run_selftest(out, st_p) ? kOk : kSelftestFailed;
  } catch (const NotGenericError& e) {
    err << e.what() << '\n';
    return kNotGeneric;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace thmat::cli
