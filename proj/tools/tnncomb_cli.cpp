// Command-line front end: exact minors and TNN checks, planar networks,
// symmetric function algebra, minor-product posets, real-rootedness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tnncomb/matrix.hpp"
#include "tnncomb/minor_ineq.hpp"
#include "tnncomb/partitions.hpp"
#include "tnncomb/planar_network.hpp"
#include "tnncomb/poly.hpp"
#include "tnncomb/realroots.hpp"
#include "tnncomb/symfunc.hpp"

namespace {

using namespace tnn;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string format = "text";
  std::string basis = "s";
  std::string method = "tl";
  std::string net_path, matrix_path, tableau_path;
  std::string expr, poly, lam, mu, shape, iset, jset;
  int n = 0;
  int truncation = 0;
  bool dot_flag = false;
};

void check_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (opt.format == a) return;
  throw CLI::ValidationError("--format", "unsupported format '" + opt.format + "' here");
}

std::string matrix_json(const Matrix& m) {
  std::ostringstream os;
  os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"entries\": [";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", \"" : "\"") << rat_str(m(i, j)) << "\"";
    os << "]";
  }
  os << "]}\n";
  return os.str();
}

void print_symfn(const SymFn& f, const Options& opt) {
  if (opt.format == "json") {
    std::ostringstream os;
    os << "{\"basis\": \"" << basis_letter(f.basis()) << "\", \"terms\": [";
    bool first = true;
    for (const auto& [l, c] : f.coefficients()) {
      os << (first ? "" : ", ") << "{\"coefficient\": \"" << rat_str(c) << "\", \"partition\": [";
      for (int i = 1; i <= l.length(); ++i) os << (i > 1 ? "," : "") << l.part(i);
      os << "]}";
      first = false;
    }
    os << "]}\n";
    std::cout << os.str();
    return;
  }
  for (const auto& line : symfn_lines(f)) std::cout << line << "\n";
}

int dispatch(const Options& opt, const std::string& group, const std::string& cmd) {
  if (group == "net") {
    if (cmd == "matrix") {
      check_format(opt, {"text", "json"});
      Matrix w = weight_matrix(network_from_json(slurp(opt.net_path)));
      std::cout << (opt.format == "json" ? matrix_json(w) : matrix_to_text(w));
    } else if (cmd == "minor") {
      PlanarNetwork g = network_from_json(slurp(opt.net_path));
      Rat v = disjoint_family_weight(g, IndexSet::parse(opt.iset), IndexSet::parse(opt.jset));
      std::cout << rat_str(v) << "\n";
    } else if (cmd == "from-tnn") {
      check_format(opt, {"text", "json", "dot"});
      PlanarNetwork g = network_from_tnn(parse_matrix_text(slurp(opt.matrix_path)));
      std::cout << (opt.format == "dot" ? network_to_dot(g) : network_to_json(g));
    } else if (cmd == "validate") {
      auto r = validate(network_from_json(slurp(opt.net_path)));
      if (r.ok) {
        std::cout << "valid\n";
      } else {
        std::cout << "invalid: " << r.violation << "\n";
        return 1;
      }
    } else if (cmd == "dot") {
      std::cout << network_to_dot(network_from_json(slurp(opt.net_path)));
    }
    return 0;
  }

  if (group == "tnn") {
    Matrix m = parse_matrix_text(slurp(opt.matrix_path));
    if (cmd == "check") {
      auto r = is_totally_nonnegative(m);
      if (r.ok)
        std::cout << "TNN: yes\n";
      else
        std::cout << "TNN: no (minor I=" << r.I.str() << " J=" << r.J.str() << " = "
                  << rat_str(r.value) << ")\n";
    } else if (cmd == "factor") {
      NevilleFactorization f = neville_factorize(m);
      for (const auto& lf : f.lowers) std::cout << "L " << lf.j << " " << rat_str(lf.c) << "\n";
      std::cout << "D";
      for (const auto& d : f.diag) std::cout << " " << rat_str(d);
      std::cout << "\n";
      for (const auto& uf : f.uppers) std::cout << "U " << uf.j << " " << rat_str(uf.c) << "\n";
    }
    return 0;
  }

  if (group == "sym") {
    if (cmd == "eval") {
      SymFn f = parse_symfn_expr(opt.expr);
      print_symfn(convert(f, basis_from_letter(opt.basis.at(0))), opt);
    } else if (cmd == "lr") {
      SymFn f(Basis::s);
      for (const auto& [nu, c] : lr_multiply(Partition::parse(opt.lam), Partition::parse(opt.mu)))
        f.add_term(nu, Rat(c));
      print_symfn(f, opt);
    } else if (cmd == "skew") {
      print_symfn(skew_schur_expand(SkewShape::parse(opt.shape)), opt);
    }
    return 0;
  }

  if (group == "tab") {
    Tableau t = Tableau::parse(slurp(opt.tableau_path));
    if (cmd == "jdt") {
      std::cout << jeu_de_taquin(t).str();
    } else if (cmd == "content") {
      auto c = content(t);
      for (size_t k = 0; k < c.size(); ++k) std::cout << (k ? " " : "") << c[k];
      std::cout << "\n";
    }
    return 0;
  }

  if (group == "ineq") {
    Method method = opt.method == "lattice" ? Method::Lattice : Method::TL;
    if (cmd == "poset") {
      Poset p = poset(opt.n, method);
      std::string fmt = opt.dot_flag ? "dot" : opt.format;
      if (fmt == "dot")
        std::cout << poset_to_dot(p);
      else if (fmt == "json")
        std::cout << poset_to_json(p);
      else
        std::cout << poset_to_text(p);
    } else if (cmd == "compare") {
      Coloring a(opt.n, IndexSet::parse(opt.iset));
      Coloring b(opt.n, IndexSet::parse(opt.jset));
      std::cout << order_str(compare(a, b, method)) << "\n";
    }
    return 0;
  }

  if (group == "roots") {
    Poly a = Poly::parse(opt.poly);
    if (cmd == "certify") {
      auto r = certify_real_distinct(a);
      if (r.certified)
        std::cout << "real-rooted: certified (Hankel TP)\n";
      else
        std::cout << "real-rooted: not certified (Hankel minor I=" << r.I.str() << " J="
                  << r.J.str() << " = " << rat_str(r.witness_value) << ")\n";
    } else if (cmd == "sturm") {
      std::cout << "distinct real roots: " << sturm_real_root_count(a) << "\n";
    } else if (cmd == "toeplitz") {
      int m = opt.truncation > 0 ? opt.truncation : a.degree() + 3;
      auto r = toeplitz_refute(a, m);
      if (r.refuted)
        std::cout << "refuted: minor I=" << r.I.str() << " J=" << r.J.str() << " = "
                  << rat_str(r.witness_value) << "\n";
      else
        std::cout << "inconclusive (no negative minor in the " << m << "x" << m
                  << " truncation)\n";
    }
    return 0;
  }

  throw std::logic_error("unhandled command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact totally-nonnegative matrix and symmetric function toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format: text, json or dot");
  };

  auto* net = app.add_subcommand("net", "planar networks");
  net->require_subcommand(1);
  auto* net_matrix = net->add_subcommand("matrix", "weight matrix of a network");
  net_matrix->add_option("network", opt.net_path, "network JSON file")->required();
  add_format(net_matrix);
  auto* net_minor = net->add_subcommand("minor", "minor via vertex-disjoint path families");
  net_minor->add_option("network", opt.net_path)->required();
  net_minor->add_option("-I", opt.iset, "row indices, e.g. 1,2")->required();
  net_minor->add_option("-J", opt.jset, "column indices, e.g. 1,3")->required();
  auto* net_from = net->add_subcommand("from-tnn", "realize a TNN matrix as a network");
  net_from->add_option("matrix", opt.matrix_path, "matrix text file")->required();
  add_format(net_from);
  auto* net_validate = net->add_subcommand("validate", "check the network invariants");
  net_validate->add_option("network", opt.net_path)->required();
  auto* net_dot = net->add_subcommand("dot", "DOT drawing of a network");
  net_dot->add_option("network", opt.net_path)->required();

  auto* tnn = app.add_subcommand("tnn", "total nonnegativity of matrices");
  tnn->require_subcommand(1);
  auto* tnn_check = tnn->add_subcommand("check", "exhaustive minor scan");
  tnn_check->add_option("matrix", opt.matrix_path)->required();
  auto* tnn_factor = tnn->add_subcommand("factor", "bidiagonal factorization");
  tnn_factor->add_option("matrix", opt.matrix_path)->required();

  auto* sym = app.add_subcommand("sym", "symmetric functions");
  sym->require_subcommand(1);
  auto* sym_eval = sym->add_subcommand("eval", "evaluate an expression");
  sym_eval->add_option("expr", opt.expr, "e.g. \"s[3,1]*s[2,1] - h[4]\"")->required();
  sym_eval->add_option("--basis", opt.basis, "output basis letter (e,h,p,m,s)");
  add_format(sym_eval);
  auto* sym_lr = sym->add_subcommand("lr", "product of two Schur functions");
  sym_lr->add_option("lambda", opt.lam)->required();
  sym_lr->add_option("mu", opt.mu)->required();
  add_format(sym_lr);
  auto* sym_skew = sym->add_subcommand("skew", "Schur expansion of a skew function");
  sym_skew->add_option("shape", opt.shape, "outer/inner, e.g. 3,2,1/2,1")->required();
  add_format(sym_skew);

  auto* tab = app.add_subcommand("tab", "tableaux");
  tab->require_subcommand(1);
  auto* tab_jdt = tab->add_subcommand("jdt", "rectify a standard skew tableau");
  tab_jdt->add_option("tableau", opt.tableau_path, "text file, '.' for inner cells")->required();
  auto* tab_content = tab->add_subcommand("content", "entry multiplicities");
  tab_content->add_option("tableau", opt.tableau_path)->required();

  auto* ineq = app.add_subcommand("ineq", "minor-product inequalities");
  ineq->require_subcommand(1);
  auto* ineq_poset = ineq->add_subcommand("poset", "poset of complementary minor products");
  ineq_poset->add_option("n", opt.n, "matrix order")->required();
  ineq_poset->add_option("--method", opt.method, "tl or lattice");
  ineq_poset->add_flag("--dot", opt.dot_flag, "shorthand for --format dot");
  add_format(ineq_poset);
  auto* ineq_cmp = ineq->add_subcommand("compare", "compare two products");
  ineq_cmp->add_option("n", opt.n)->required();
  ineq_cmp->add_option("-I", opt.iset)->required();
  ineq_cmp->add_option("-J", opt.jset)->required();
  ineq_cmp->add_option("--method", opt.method);

  auto* roots = app.add_subcommand("roots", "real-rootedness of polynomials");
  roots->require_subcommand(1);
  auto* roots_certify = roots->add_subcommand("certify", "Hankel total positivity certificate");
  roots_certify->add_option("poly", opt.poly, "\"1,6,5,1\" or \"1 + 6 z + 5 z^2 + 1 z^3\"")
      ->required();
  auto* roots_sturm = roots->add_subcommand("sturm", "count distinct real roots");
  roots_sturm->add_option("poly", opt.poly)->required();
  auto* roots_toeplitz = roots->add_subcommand("toeplitz", "search for a refuting minor");
  roots_toeplitz->add_option("poly", opt.poly)->required();
  roots_toeplitz->add_option("-m", opt.truncation, "truncation size (default degree + 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* group = app.get_subcommands().at(0);
    CLI::App* cmd = group->get_subcommands().at(0);
    return dispatch(opt, group->get_name(), cmd->get_name());
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
