#include "modgin/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modgin/ideal_file.hpp"
#include "modgin/reproduce.hpp"

namespace modgin {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

HilbertCatalogEntry catalog_from_shape(const std::string& shape, std::uint32_t p) {
  if (shape == "V4") return hilbert_ideal_gens(HilbertShape::V4, p);
  if (shape == "V5") return hilbert_ideal_gens(HilbertShape::V5, p);
  unsigned l = 0, m = 0;
  for (unsigned n : parse_module_shape(shape)) {
    if (n == 2)
      ++l;
    else if (n == 3)
      ++m;
    else
      throw UnsupportedShape("no Hilbert ideal catalog for '" + shape + "'");
  }
  return hilbert_ideal_gens(HilbertShape::lV2mV3, p, l, m);
}

Permutation parse_perm(const std::string& text, std::size_t n) {
  std::istringstream is(text);
  std::vector<std::size_t> images;
  std::string word;
  while (is >> word) {
    if (word.empty() || !std::all_of(word.begin(), word.end(), [](unsigned char c) { return std::isdigit(c); })) throw InvalidPermutation("--perm expects integers");
    images.push_back(std::stoul(word));
  }
  if (images.size() != n) throw InvalidPermutation("--perm needs " + std::to_string(n) + " entries");
  return Permutation::from_one_based(images);
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
         dynamic_cast<const UnknownVariable*>(&e) || dynamic_cast<const DegreeOverflow*>(&e) ||
         dynamic_cast<const InvalidPermutation*>(&e) || dynamic_cast<const UnsupportedShape*>(&e) ||
         dynamic_cast<const InvalidCharacteristic*>(&e) || dynamic_cast<const NotHomogeneous*>(&e) ||
         dynamic_cast<const ZeroPolynomial*>(&e) || dynamic_cast<const NotASubmodule*>(&e) ||
         dynamic_cast<const Degenerate*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
         dynamic_cast<const RingMismatch*>(&e);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, initial ideals and generic initial ideals over finite fields", "modgin"};
  app.require_subcommand(1);

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Ideal file; '-' or absent reads stdin"); };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis, as an ideal file");
  add_file(gb);
  auto* initial = app.add_subcommand("initial", "Initial ideal of the ideal");
  add_file(initial);

  unsigned trials = 16, threads = 1;
  std::uint64_t seed = 0;
  unsigned ext = 0;
  auto* gin_cmd = app.add_subcommand("gin", "Generic initial ideal by majority over random coordinates");
  add_file(gin_cmd);
  gin_cmd->add_option("--trials", trials, "Random coordinate changes")->check(CLI::PositiveNumber);
  gin_cmd->add_option("--seed", seed, "Master seed");
  gin_cmd->add_option("--ext", ext, "Sample over F_{p^K} instead of the default extension")->check(CLI::PositiveNumber);
  gin_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* borel = app.add_subcommand("borel", "Borel-fixedness of a monomial ideal");
  add_file(borel);

  std::string shape;
  std::uint32_t p = 0;
  auto* hilbert = app.add_subcommand("hilbert", "Print a catalogued Hilbert ideal (V4, V5, or sums of V2 and V3)");
  hilbert->add_option("shape", shape, "Module shape, e.g. V4, V5, 2V2+V3")->required();
  hilbert->add_option("p", p, "Characteristic")->required();

  unsigned bound = 0;
  std::string orientation = "first", candidates = "basis";
  auto* transfer = app.add_subcommand("transfer-ideal", "Generators of the transfer ideal up to a degree");
  transfer->add_option("shape", shape, "Module shape, e.g. V3, 2V2, V2+V3")->required();
  transfer->add_option("p", p, "Characteristic")->required();
  auto* bound_opt = transfer->add_option("--bound", bound, "Degree bound (default: sum of n_j (p - 1))");
  transfer->add_option("--orientation", orientation, "Fixed coordinate of each block: first or last")
      ->check(CLI::IsMember({"first", "last"}));
  transfer->add_option("--candidates", candidates, "Monomials to transfer: basis or all")
      ->check(CLI::IsMember({"basis", "all"}));

  std::string perm_text;
  auto* perm = app.add_subcommand("check-permutation", "Compare gin under a permuted order with the permuted gin");
  add_file(perm);
  perm->add_option("--perm", perm_text, "One-based images, e.g. \"2 1 3\"")->required();
  perm->add_option("--trials", trials, "Random coordinate changes")->check(CLI::PositiveNumber);
  perm->add_option("--seed", seed, "Master seed");

  ReproduceOptions repro;
  bool no_timing = false;
  std::vector<std::string> only;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Run every reproduction claim; one line per claim");
  reproduce->add_option("--p", repro.p, "Characteristic of the V5 claims (prime >= 7)");
  reproduce->add_flag("--fast", repro.fast, "Fewer random cases");
  reproduce->add_option("--threads", repro.threads, "Worker threads for gin trials")->check(CLI::PositiveNumber);
  reproduce->add_flag("--no-timing", no_timing, "Print '-' instead of elapsed seconds");
  reproduce->add_option("--claim", only, "Run only these claims");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gb->parsed() || initial->parsed()) {
      auto f = parse_ideal_file(read_source(file, in));
      auto basis = buchberger(f.ideal, f.order);
      if (gb->parsed()) {
        out << format_ideal_file(IdealPresentation(f.ring(), basis.elements), f.order, f.ext);
      } else {
        out << "initial = " << initial_ideal(basis).to_string() << "\n";
        out << "order = " << f.order.name() << "\n";
      }
      return kExitOk;
    }

    if (gin_cmd->parsed()) {
      auto f = parse_ideal_file(read_source(file, in));
      GinOptions options;
      options.trials = trials;
      options.seed = seed;
      options.threads = threads;
      if (ext) options.field = Field::extension(f.ring()->characteristic(), ext);
      auto report = gin(f.ideal, f.order, options);
      out << "gin = " << report.result.to_string() << "\n";
      out << "order = " << f.order.name() << "\n";
      out << "agreement = " << report.agreeing << "/" << report.trials << "\n";
      out << "field_size = " << report.field_size << "\n";
      out << "borel_fixed = " << yes_no(report.borel_fixed) << "\n";
      return kExitOk;
    }

    if (borel->parsed()) {
      auto f = parse_ideal_file(read_source(file, in));
      std::vector<Monomial> gens;
      for (const auto& g : f.ideal.generators()) {
        if (!g.is_monomial()) throw InvalidArgument("borel expects monomial generators, got " + g.to_string(f.order));
        gens.push_back(g.terms().front().monomial);
      }
      MonomialIdeal ideal(f.ring(), std::move(gens));
      auto verdict = is_borel_fixed(ideal, f.order);
      if (verdict.fixed)
        out << "BOREL FIXED\n";
      else
        out << "NOT BOREL FIXED; witness " << describe(*verdict.witness, *f.ring()) << "\n";
      return kExitOk;
    }

    if (hilbert->parsed()) {
      auto entry = catalog_from_shape(shape, p);
      out << "# Hilbert ideal of " << entry.module.shape() << " over F_" << p << "\n";
      out << format_ideal_file(entry.ideal, MonomialOrder(OrderKind::grevlex, entry.module.nvars()));
      return kExitOk;
    }

    if (transfer->parsed()) {
      if (!is_prime(p)) throw InvalidCharacteristic(std::to_string(p) + " is not prime");
      CyclicModule module(p, parse_module_shape(shape),
                          orientation == "last" ? Orientation::fixed_last : Orientation::fixed_first);
      const unsigned d = bound_opt->count() ? bound : default_transfer_bound(module);
      auto gens = transfer_ideal_gens(module, d,
                                      candidates == "all" ? TransferCandidates::all_monomials
                                                          : TransferCandidates::module_basis);
      out << "# transfer ideal of " << module.shape() << " over F_" << p << " up to degree " << d << "\n";
      out << format_ideal_file(gens, MonomialOrder(OrderKind::grevlex, module.nvars()));
      return kExitOk;
    }

    if (perm->parsed()) {
      auto f = parse_ideal_file(read_source(file, in));
      auto pi = parse_perm(perm_text, f.ring()->nvars());
      GinOptions options;
      options.trials = trials;
      options.seed = seed;
      auto check = check_permutation_theorem(f.ideal, f.order, pi, options);
      out << "holds = " << yes_no(check.holds) << "\n";
      out << "gin_permuted_order = " << check.permuted_order_gin.to_string() << "\n";
      out << "permuted_gin = " << check.permuted_gin.to_string() << "\n";
      return check.holds ? kExitOk : kExitMismatch;
    }

    if (reproduce->parsed()) {
      const auto& ids = only.empty() ? claim_ids() : only;
      bool all = true;
      for (const auto& id : ids) {
        auto r = run_claim(id, repro);
        all = all && r.pass;
        out << r.id << " " << (r.pass ? "PASS" : "FAIL") << " ";
        if (no_timing) {
          out << "-";
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
          out << buf;
        }
        if (!r.pass) {
          std::string detail = r.detail;
          std::replace(detail.begin(), detail.end(), '\n', ' ');
          out << " " << detail;
        }
        out << "\n";
      }
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e) ? kExitInputError : kExitMismatch;
  }
  return kExitInputError;
}

}  // namespace modgin
