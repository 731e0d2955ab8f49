#include "hesse/oracle.hpp"

#include <algorithm>
#include <thread>

#include "hesse/hesse.hpp"

namespace hesse::oracle {

LineEnumeration enumerate_line_points(const ProjectiveLine& line) {
  const Field& field = line.field();
  if (!field.is_finite()) {
    throw UnsupportedFieldError("a line over the rationals has infinitely many points");
  }
  LineEnumeration out{line, {}};
  const auto p = field.modulus();
  out.points.reserve(p + 1);
  const Scalar one = Scalar::one(field);
  for (std::uint64_t t = 0; t < p; ++t) {
    out.points.push_back(
        combine(one, line.first(), Scalar::from_int(field, static_cast<long long>(t)),
                line.second()));
  }
  out.points.push_back(line.second());
  return out;
}

BruteResult brute_conjugate(const BilinearForm& form, const ProjectiveLine& l1,
                            const ProjectiveLine& l2) {
  const auto candidates = enumerate_line_points(l1);
  const auto targets = enumerate_line_points(l2);
  for (const auto& e : candidates.points) {
    const Vector e_dual = form.covector(e.coords());
    const bool annihilates = std::all_of(targets.points.begin(), targets.points.end(),
                                         [&](const ProjectivePoint& f) {
                                           return dot(e_dual, f.coords()).is_zero();
                                         });
    if (annihilates) return {true, e};
  }
  return {false, std::nullopt};
}

std::uint64_t projective_space_size(std::uint64_t p, std::size_t dim) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i <= dim; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

namespace {

struct Partial {
  std::uint64_t tuples = 0;
  std::uint64_t conjugate = 0;
  std::vector<ScanMismatch> mismatches;
};

void scan_first_points(const std::vector<ProjectivePoint>& points,
                       const std::vector<BilinearForm>& forms, std::size_t begin,
                       std::size_t stride, Partial& out) {
  const std::size_t n = points.size();
  for (std::size_t a = begin; a < n; a += stride) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      const ProjectiveLine ab = line_span(points[a], points[b]);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          const ProjectiveLine cd = line_span(points[c], points[d]);
          ++out.tuples;
          for (std::size_t f = 0; f < forms.size(); ++f) {
            const bool brute = brute_conjugate(forms[f], ab, cd).conjugate;
            const bool det =
                conjugacy_expression(forms[f], points[a], points[b], points[c], points[d])
                    .is_zero();
            out.conjugate += det;
            if (brute != det) out.mismatches.push_back({f, {a, b, c, d}, brute, det});
          }
        }
      }
    }
  }
}

}  // namespace

ScanReport lemma_agreement_scan(const Field& field, std::size_t dim,
                                const std::vector<BilinearForm>& forms,
                                const ScanOptions& options) {
  if (!field.is_finite()) {
    throw UnsupportedFieldError("the brute-force scan needs a finite field");
  }
  for (const auto& f : forms) {
    if (f.size() != dim + 1 || !(f.field() == field)) {
      throw ShapeError("scan form does not match " + field.name() + " P^" + std::to_string(dim));
    }
  }
  const std::uint64_t size = projective_space_size(field.modulus(), dim);
  // Compare without overflow: size^4 * |forms| <= budget.
  const long double cost = static_cast<long double>(size) * size * size * size *
                           static_cast<long double>(std::max<std::size_t>(forms.size(), 1));
  if (cost > static_cast<long double>(options.budget)) {
    throw ScanTooLargeError("scan of P^" + std::to_string(dim) + "(" + field.name() + ") with " +
                            std::to_string(forms.size()) + " form(s) costs " +
                            std::to_string(static_cast<unsigned long long>(cost)) +
                            " > budget " + std::to_string(options.budget));
  }

  const auto start = std::chrono::steady_clock::now();
  const auto points = enumerate_projective_space(field, dim);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(points.size()));

  std::vector<Partial> partials(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 1; t < threads; ++t) {
      workers.emplace_back(
          [&, t] { scan_first_points(points, forms, t, threads, partials[t]); });
    }
    scan_first_points(points, forms, 0, threads, partials[0]);
  }

  ScanReport report{field, dim, forms.size(), 0, 0, {}, {}};
  for (auto& p : partials) {
    report.tuples_scanned += p.tuples;
    report.conjugate_count += p.conjugate;
    report.mismatches.insert(report.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const ScanMismatch& x, const ScanMismatch& y) {
              return std::tie(x.form_index, x.tuple) < std::tie(y.form_index, y.tuple);
            });
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace hesse::oracle
