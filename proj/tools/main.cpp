// dagger: command-line front end. Every command prints one JSON object on
// stdout; failures print {"error": …} and exit nonzero.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dagger/json_io.hpp"

namespace {

using namespace dagger;
using dagger::json::Json;

enum ExitCode { kOk = 0, kParse = 2, kDomain = 3, kIncomplete = 4, kInternal = 5 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return json::parse_text(read_input(path)); }

// An order file, or the report of a command that produced an order.
Order4 read_order(const std::string& path) {
  const Json j = read_json(path);
  if (j.is_object() && j.contains("order") && !j.contains("basis")) return json::order_from_json(j["order"]);
  return json::order_from_json(j);
}

Int parse_int(const std::string& text) {
  const Rat x = parse_rat(text);
  if (x.get_den() != 1) throw ParseError("expected an integer, got " + text);
  return x.get_num();
}

Quat parse_element(const QuaternionAlgebra& alg, const std::string& text) {
  std::vector<Rat> c;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) c.push_back(parse_rat(part));
  if (c.size() != 4) throw ParseError("element must have four comma-separated coordinates: " + text);
  return Quat(alg, c);
}

Json order_report(const Order4& order) {
  return {{"order", json::to_json(static_cast<const IntegralLattice4&>(order))},
          {"disc", json::to_json(reduced_discriminant(order))}};
}

void apply_factor_bound() {
  const char* env = std::getenv("DAGGER_FACTOR_BOUND");
  if (env == nullptr || *env == '\0') return;
  const Int bound = parse_int(env);
  if (bound < 2 || !bound.fits_ulong_p()) throw ParseError("DAGGER_FACTOR_BOUND must be an integer >= 2");
  set_default_trial_bound(bound.get_ui());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion algebras with orthogonal involutions and their maximal orders"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_flag("--json", "JSON output (the default and only stable mode)");

  std::string a_text, b_text, u_text, p_text, lambda_text, file_a, file_b, inv_file;
  int radius = -1;
  Json result;

  auto* disc_algebra = app.add_subcommand("disc-algebra", "Discriminant of (a, b / Q)");
  disc_algebra->add_option("-a", a_text, "a")->required();
  disc_algebra->add_option("-b", b_text, "b")->required();
  disc_algebra->callback([&] {
    result = {{"disc", json::to_json(algebra_discriminant(QuaternionAlgebra(parse_rat(a_text), parse_rat(b_text))))}};
  });

  auto* disc_involution = app.add_subcommand("disc-involution", "Discriminant of the involution x -> u x* u^-1");
  disc_involution->add_option("-a", a_text, "a");
  disc_involution->add_option("-b", b_text, "b");
  disc_involution->add_option("-u", u_text, "pure element u as w,x,y,z");
  disc_involution->add_option("--file", inv_file, "involution JSON with an \"algebra\" member");
  disc_involution->callback([&] {
    const auto inv = [&] {
      if (!inv_file.empty()) return json::involution_from_json(read_json(inv_file));
      if (a_text.empty() || b_text.empty() || u_text.empty()) throw ParseError("need -a, -b and -u, or --file");
      const QuaternionAlgebra alg(parse_rat(a_text), parse_rat(b_text));
      return OrthogonalInvolution(parse_element(alg, u_text));
    }();
    const SquareClass d = involution_discriminant(inv);
    result = {{"disc", to_string(d.representative())}, {"iota", json::to_json(iota(d))}};
  });

  auto* intersect = app.add_subcommand("intersect", "O1 ∩ O2, or O ∩ O^‡ with --involution");
  intersect->add_option("order", file_a, "order JSON ('-' for stdin)")->required();
  intersect->add_option("other", file_b, "second order JSON");
  intersect->add_option("--involution", inv_file, "involution JSON");
  intersect->callback([&] {
    const Order4 o = read_order(file_a);
    if (file_b.empty() == inv_file.empty()) throw ParseError("give either a second order or --involution");
    if (!file_b.empty()) {
      result = order_report(o.intersect(read_order(file_b)));
    } else {
      result = order_report(dagger_intersection(json::involution_from_json(o.algebra(), read_json(inv_file)), o));
    }
  });

  auto* check_maximal = app.add_subcommand("check-maximal", "Certify whether a ‡-order is maximal");
  check_maximal->add_option("order", file_a, "order JSON")->required();
  check_maximal->add_option("involution", inv_file, "involution JSON")->required();
  check_maximal->callback([&] {
    const Order4 o = read_order(file_a);
    result = json::to_json(is_maximal_dagger_order(o, json::involution_from_json(o.algebra(), read_json(inv_file))));
  });

  auto* enlarge = app.add_subcommand("enlarge", "A maximal ‡-order containing O ∩ O^‡");
  enlarge->add_option("order", file_a, "order JSON")->required();
  enlarge->add_option("involution", inv_file, "involution JSON")->required();
  enlarge->callback([&] {
    const Order4 o = read_order(file_a);
    result = order_report(enlarge_to_maximal_dagger(o, json::involution_from_json(o.algebra(), read_json(inv_file))));
  });

  auto* local_classify = app.add_subcommand("local-classify", "Classes of maximal ‡_λ-orders of Mat(2, Q_p)");
  local_classify->add_option("-p", p_text, "prime")->required();
  local_classify->add_option("-l,--lambda", lambda_text, "square-free integer λ")->required();
  local_classify->add_option("--radius", radius, "enumeration radius in the Bruhat-Tits tree");
  local_classify->callback([&] {
    const Int p = parse_int(p_text);
    const Rat lambda = parse_rat(lambda_text);
    const long classes = count_classes(p, lambda);
    const LocalClassification c =
        classify_maximal_orders(p, lambda, radius >= 0 ? radius : default_radius(p));
    if (static_cast<long>(c.class_count()) != classes)
      throw InternalError("enumeration found " + std::to_string(c.class_count()) + " classes, expected " +
                          std::to_string(classes));
    result = json::classification_report(c, classes);
  });

  auto* defect = app.add_subcommand("defect", "Quadratic defect of a at p");
  defect->add_option("-a", a_text, "a")->required();
  defect->add_option("-p", p_text, "prime")->required();
  defect->callback([&] {
    const LocalIdeal d = quadratic_defect(parse_rat(a_text), parse_int(p_text));
    result = {{"p", d.prime.get_si()},
              {"valuation", d.is_zero() ? Json(nullptr) : Json(d.valuation.value())}};
  });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_p");
  hilbert->add_option("-a", a_text, "a")->required();
  hilbert->add_option("-b", b_text, "b")->required();
  hilbert->add_option("-p", p_text, "prime or 'inf'")->required();
  hilbert->callback([&] {
    const Place v = p_text == "inf" ? Place::real() : Place::finite(parse_int(p_text));
    result = {{"symbol", hilbert_symbol(parse_rat(a_text), parse_rat(b_text), v)}};
  });

  int code = kOk;
  try {
    apply_factor_bound();
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    result = json::error_object("usage", e.what());
    code = kParse;
  } catch (const ParseError& e) {
    result = json::error_object("parse", e.what());
    code = kParse;
  } catch (const DomainError& e) {
    result = json::error_object("domain", e.what());
    code = kDomain;
  } catch (const FactorizationError& e) {
    result = json::error_object("factorization", e.what());
    code = kIncomplete;
  } catch (const BudgetExceeded& e) {
    result = json::error_object("budget", e.what());
    code = kIncomplete;
  } catch (const std::exception& e) {
    result = json::error_object("internal", e.what());
    code = kInternal;
  }
  std::cout << (pretty ? result.dump(2) : json::dump(result)) << '\n';
  return code;
}
