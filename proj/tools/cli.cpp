#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "rays/biaccess.hpp"
#include "rays/error.hpp"
#include "rays/figures.hpp"
#include "rays/kneading.hpp"
#include "rays/ksigma.hpp"
#include "rays/raytrace.hpp"
#include "rays/realslice.hpp"
#include "rays/tuning.hpp"

namespace rays::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string out;
};

std::string line(const ojson& j) { return j.dump() + "\n"; }

Angle parse_angle(const std::string& s) { return Angle(parse_rational(s)); }

// Writes to --out when given, otherwise to the data stream.
void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(Errc::domain, "cannot write '" + g.out + "'");
  f << text;
}

std::string decimal(double x, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::vector<int> range(int lo, int hi) {
  if (hi < lo) throw Error(Errc::domain, "empty scale range");
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

TuningWords words_for(int p, unsigned long n) {
  if (!opening_accepted(p, n)) throw Error(Errc::domain, "(p, n) is not an opening");
  return words_from_opening(make_opening(p, n));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"External angles of the real Mandelbrot slice", "rays"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for random sampling");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--out", g.out, "output file (figures: directory)");

  std::function<void()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // in-r
  std::string t_text, word_text;
  std::size_t depth = 0, sample = 0;
  unsigned long max_den = 4096;
  {
    auto* s = sub("in-r", "test t in R exactly, a word to a depth, or random samples");
    s->add_option("--t", t_text, "angle num/den");
    s->add_option("--word", word_text, "binary word 0.w");
    s->add_option("--depth", depth, "steps checked for --word");
    s->add_option("--sample", sample, "random rationals to test");
    s->add_option("--max-den", max_den, "denominator bound for --sample");
    s->callback([&] {
      action = [&] {
        if (!word_text.empty()) {
          DepthVerdict v = in_R_depth(BinaryWord::parse(word_text), depth);
          ojson j{{"word", word_text}, {"depth", depth}, {"verdict", v.survives ? "survives" : "rejected"}};
          if (!v.survives) j["step"] = v.step;
          out << line(j);
        } else if (sample > 0) {
          std::mt19937_64 rng(g.seed);
          std::uniform_int_distribution<unsigned long> den_dist(1, std::max(1UL, max_den));
          for (std::size_t i = 0; i < sample; ++i) {
            unsigned long d = den_dist(rng);
            unsigned long n = std::uniform_int_distribution<unsigned long>(0, d / 2)(rng);
            Angle t{Rational(Integer(n), Integer(d))};
            out << line({{"t", t.str()}, {"in_R", in_R(t)}});
          }
        } else {
          if (t_text.empty()) throw CLI::RequiredError("--t, --word or --sample");
          Angle t = parse_angle(t_text);
          out << line({{"t", t.str()}, {"in_R", in_R(t)}});
        }
      };
    });
  }

  // openings, opening-sum, cover
  int max_period = 0;
  std::vector<int> scales;
  {
    auto* s = sub("openings", "openings of period <= P as JSON lines");
    s->add_option("--max-period", max_period)->required();
    s->callback([&] {
      action = [&] {
        std::string text;
        for (const auto& o : enumerate_openings(max_period, g.jobs)) text += o.to_json() + "\n";
        out << text;
      };
    });
    auto* s2 = sub("opening-sum", "exact total length of the openings of period <= P");
    s2->add_option("--max-period", max_period)->required();
    s2->callback([&] {
      action = [&] {
        out << line({{"max_period", max_period}, {"sum", to_string(openings_length_sum(max_period, g.jobs))}});
      };
    });
    auto* s3 = sub("cover", "interval cover of R; with --scales a box count");
    s3->add_option("--max-period", max_period)->required();
    s3->add_option("--scales", scales, "first and last generation")->expected(2);
    s3->callback([&] {
      action = [&] {
        IntervalSet c = cover_R(max_period, g.jobs);
        if (scales.empty()) {
          emit(g, out, c.to_csv());
          return;
        }
        auto sc = range(scales[0], scales[1]);
        BoxCount bc = boxcount_dimension(c, sc);
        out << line({{"scales", bc.scales}, {"counts", bc.counts}, {"slope", bc.slope}});
      };
    });
  }

  // ksigma-build, ksigma-verify, ksigma-dim
  std::string sigma_text;
  int level = 2, p = 0, lo = 8, hi = 20;
  {
    auto* s = sub("ksigma-build", "level n of K_sigma as interval CSV");
    s->add_option("--sigma", sigma_text)->required();
    s->add_option("--level", level)->required();
    s->callback([&] {
      action = [&] { emit(g, out, build_level(SigmaParam(parse_rational(sigma_text)), level).unwrapped().to_csv()); };
    });
    auto* s2 = sub("ksigma-verify", "check the structure clauses for sigma = 2^-p");
    s2->add_option("--p", p)->required();
    s2->add_option("--levels", level)->required();
    s2->callback([&] {
      action = [&] {
        StructureReport r = verify_structure(SigmaParam::dyadic(p), level);
        out << r.to_json() << "\n";
        if (!r.all_pass()) throw Error(Errc::domain, "structure check failed");
      };
    });
    auto* s3 = sub("ksigma-dim", "box-count slope of K_sigma and the closed-form lower bound");
    s3->add_option("--sigma", sigma_text)->required();
    s3->add_option("--from", lo);
    s3->add_option("--to", hi);
    s3->callback([&] {
      action = [&] {
        SigmaParam sp(parse_rational(sigma_text));
        ojson j{{"sigma", to_string(sp.sigma())}, {"levels", {lo, hi}}, {"slope", boxdim_estimate(sp, lo, hi)}};
        j["lower_bound"] = sp.dyadic_exponent() ? ojson(dim_lower_bound(sp)) : ojson(nullptr);
        out << line(j);
      };
    });
  }

  // tau, pi, nonrec
  std::string c_text;
  std::size_t bits = 24, steps = 100;
  double tol = 1e-10;
  {
    auto* s = sub("tau", "leading bits of tau(c)");
    s->add_option("--c", c_text)->required();
    s->add_option("--bits", bits)->required();
    s->callback([&] {
      action = [&] {
        RealParam c = RealParam::parse(c_text);
        BinaryWord w = tau(c, bits);
        out << line({{"input", c_text},
                     {"value", decimal(w.to_double())},
                     {"bits", w.str()},
                     {"certified_bits", w.size()}});
      };
    });
    auto* s2 = sub("pi", "the real parameter with tau(c) = t");
    s2->add_option("--t", t_text)->required();
    s2->add_option("--tol", tol);
    s2->callback([&] {
      action = [&] {
        Angle t = parse_angle(t_text);
        PiResult r = pi(t, tol);
        out << line({{"input", t.str()},
                     {"value", to_decimal(r.c, 20)},
                     {"lo", to_decimal(r.lo, 20)},
                     {"hi", to_decimal(r.hi, 20)},
                     {"certified_bits", r.certified_bits}});
      };
    });
    auto* s3 = sub("nonrec", "certified lower bound on min |Q_c^n(0)|, 1 <= n <= N");
    s3->add_option("--c", c_text)->required();
    s3->add_option("--steps", steps)->required();
    s3->callback([&] {
      action = [&] {
        RealParam c = RealParam::parse(c_text);
        out << line({{"c", c_text}, {"steps", steps}, {"min_distance", nonrecurrence_depth(c, steps)}});
      };
    });
  }

  // tune, psi, cantor-dim
  unsigned long n_index = 0;
  int depth_bits = 0, cover_period = 0, refine = 0;
  {
    auto* s = sub("tune", "A_H(t) for the component of opening (p, n)");
    s->add_option("--p", p)->required();
    s->add_option("--n", n_index)->required();
    s->add_option("--t", t_text)->required();
    s->callback([&] {
      action = [&] {
        TuningWords w = words_for(p, n_index);
        Angle t = parse_angle(t_text);
        TunedAngle a = tune_angle(w, t);
        ojson images = ojson::array({to_string(a.lower)});
        if (a.upper) images.push_back(to_string(*a.upper));
        out << line({{"p", p}, {"n", n_index}, {"t", t.str()}, {"images", images}});
      };
    });
    auto* s2 = sub("psi", "the staircase left inverse of A_H");
    s2->add_option("--p", p)->required();
    s2->add_option("--n", n_index)->required();
    s2->add_option("--s", t_text)->required();
    s2->callback([&] {
      action = [&] {
        TuningWords w = words_for(p, n_index);
        Rational s = parse_rational(t_text);
        out << line({{"p", p}, {"n", n_index}, {"s", to_string(s)}, {"psi", to_string(staircase_psi(w, s))}});
      };
    });
    auto* s3 = sub("cantor-dim", "box-count slope of A_H(T), or of the tuned R cover");
    s3->add_option("--p", p)->required();
    s3->add_option("--n", n_index)->required();
    s3->add_option("--depth", depth_bits, "generations for A_H(T)");
    s3->add_option("--cover", cover_period, "period bound of the tuned cover");
    s3->add_option("--refine", refine, "refinement generation of the tuned cover");
    s3->callback([&] {
      action = [&] {
        TuningWords w = words_for(p, n_index);
        ojson j{{"p", p}, {"n", n_index}};
        if (cover_period > 0) {
          int m = refine > 0 ? refine : 2 * cover_period;
          j["cover"] = cover_period;
          j["refine"] = m;
          j["slope"] = tuned_cover_slope(w, cover_period, m, g.jobs);
        } else {
          int d = depth_bits > 0 ? depth_bits : std::max(4 * p, 8 * p);
          j["depth"] = d;
          j["slope"] = cantor_boxdim(w, d);
        }
        j["expected"] = 1.0 / p;
        out << line(j);
      };
    });
  }

  // s-c, dim-report
  std::string tau_text;
  std::vector<std::string> sweep;
  int table_period = 12;
  {
    auto* s = sub("s-c", "exact membership of t in S_c given tau(c)");
    s->add_option("--t", t_text)->required();
    s->add_option("--tau", tau_text)->required();
    s->callback([&] {
      action = [&] {
        Angle t = parse_angle(t_text);
        Rational tc = parse_rational(tau_text);
        out << line({{"t", t.str()}, {"tau", to_string(tc)}, {"member", s_c_membership(t, tc)}});
      };
    });
    auto* s2 = sub("dim-report", "rho, sigma, ell, ell' and a box-count estimate as CSV");
    s2->add_option("--c", c_text);
    s2->add_option("--sweep", sweep, "lo hi steps")->expected(3);
    s2->add_option("--table-period", table_period, "period bound of the component table");
    s2->callback([&] {
      action = [&] {
        auto table = enumerate_openings(table_period, g.jobs);
        std::vector<RealParam> cs;
        if (!sweep.empty()) {
          Rational a = parse_decimal(sweep[0]), b = parse_decimal(sweep[1]);
          long k = std::stol(sweep[2]);
          if (k < 1) throw Error(Errc::domain, "steps must be >= 1");
          for (long i = 0; i <= k; ++i) {
            Rational step(i, k);
            step.canonicalize();
            cs.emplace_back(a + (b - a) * step);
          }
        } else {
          if (c_text.empty()) throw CLI::RequiredError("--c or --sweep");
          cs.push_back(RealParam::parse(c_text));
        }
        std::string text = DimBoundReport::csv_header() + "\n";
        for (const auto& c : cs) {
          try {
            text += dim_report(c, table).csv_row() + "\n";
          } catch (const Error& e) {
            if (cs.size() == 1) throw;
            text += c.str() + ",,,,,," + std::string(to_string(e.code())) + "\n";
          }
        }
        out << text;
      };
    });
  }

  // trace-ray, verify-landing, figures
  double r0 = 100.0;
  std::size_t ray_depth = 40;
  bool ppm = false;
  {
    auto* s = sub("trace-ray", "polyline of R_c(t) as CSV");
    s->add_option("--c", c_text)->required();
    s->add_option("--t", t_text)->required();
    s->add_option("--depth", ray_depth);
    s->add_option("--r0", r0);
    s->callback([&] {
      action = [&] { emit(g, out, trace_ray(RealParam::parse(c_text), parse_angle(t_text), ray_depth, r0).to_csv()); };
    });
    auto* s2 = sub("verify-landing", "distance from the end of R_c(tau(c)) to c or the dynamic root");
    s2->add_option("--c", c_text)->required();
    s2->add_option("--bits", bits);
    s2->add_option("--depth", ray_depth);
    s2->add_option("--table-period", table_period);
    s2->callback([&] {
      action = [&] {
        auto table = enumerate_openings(table_period, g.jobs);
        LandingResult r = verify_landing(RealParam::parse(c_text), std::max<std::size_t>(bits, ray_depth + 64),
                                         ray_depth, table);
        out << line({{"c", c_text},
                      {"tau", r.tau.str()},
                      {"depth", ray_depth},
                      {"target", r.target},
                      {"at_root", r.at_root},
                      {"residual", r.residual}});
      };
    });
    auto* s3 = sub("figures", "write openings.svg, ksigma.svg and rays.svg into --out");
    s3->add_option("--ppm", ppm, "also write an escape-time backdrop rays.ppm");
    s3->callback([&] {
      action = [&] {
        namespace fs = std::filesystem;
        fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
        fs::create_directories(dir);
        auto write = [&](const char* name, const std::string& text) {
          std::ofstream f(dir / name, std::ios::binary);
          if (!f) throw Error(Errc::domain, std::string("cannot write ") + name);
          f << text;
          out << (dir / name).string() << "\n";
        };
        write("openings.svg", openings_circle_svg(enumerate_openings(8, g.jobs)));
        write("ksigma.svg", ksigma_hierarchy_svg(SigmaParam::dyadic(3), 9));
        RealParam c = RealParam::parse("-1.5436890126920763");
        std::vector<RayPolyline> traced;
        for (const char* t : {"0", "1/2", "5/12", "7/12", "1/6", "5/6", "1/3", "2/3"}) {
          traced.push_back(trace_ray(c, parse_angle(t), 24));
        }
        Viewport view;
        write("rays.svg", ray_overlay_svg(c.c, traced, view));
        if (ppm) write("rays.ppm", escape_time_ppm(c.c, view, 320, 240));
      };
    });
  }

  auto schema = [&]() {
    auto subs = app.get_subcommands();
    return subs.empty() ? app.help() : subs.front()->help();
  };
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << schema();
    return 2;
  }
  try {
    action();
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << schema();
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() != Errc::parse) return 1;
    err << schema();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rays::cli
