#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homlie/graded.hpp"

namespace homlie {

enum class Status { fail, info, warning, not_applicable };
enum class Verdict { pass, fail, not_applicable };

const char *to_string(Status s);
const char *to_string(Verdict v);

struct Finding {
	std::string check;
	Status status = Status::fail;
	std::optional<Tuple> witness;
	std::optional<Vector> residual;
	std::string note;
};

using Metric = std::variant<std::int64_t, std::string, std::vector<std::int64_t>, Vector, std::vector<Vector>>;

/// Outcome of a verifier. Fail findings are capped per check; the full count
/// is kept in violation_counts.
class Report {
public:
	static constexpr std::size_t max_failures_per_check = 32;

	Report() = default;
	explicit Report(std::string command) : command_(std::move(command)) {}

	const std::string &command() const noexcept { return command_; }
	void set_command(std::string c) { command_ = std::move(c); }

	void fail(const std::string &check, Tuple witness, std::optional<Vector> residual = std::nullopt,
	          std::string note = {});
	void add(Finding f);
	void info(const std::string &check, std::string note);
	void warn(const std::string &check, std::string note);
	void mark_not_applicable(const std::string &check, std::string note);
	void metric(const std::string &key, Metric value) { metrics_[key] = std::move(value); }

	/// Appends findings, counts and metrics of `other`.
	void merge(const Report &other);
	/// Copy with check and metric names prefixed by "prefix/". Not-applicable
	/// findings become info when `demote` is set.
	Report prefixed(const std::string &prefix, bool demote = false) const;

	Verdict verdict() const;
	bool passed() const { return verdict() != Verdict::fail; }
	std::size_t failures() const;
	std::size_t failures(const std::string &check) const;
	/// First stored fail finding, optionally restricted to one check.
	const Finding *first_failure(const std::string &check = {}) const;

	const std::vector<Finding> &findings() const noexcept { return findings_; }
	const std::map<std::string, Metric> &metrics() const noexcept { return metrics_; }
	const std::map<std::string, std::size_t> &violation_counts() const noexcept { return counts_; }

private:
	std::string command_;
	std::vector<Finding> findings_;
	std::map<std::string, Metric> metrics_;
	std::map<std::string, std::size_t> counts_;
	bool not_applicable_ = false;
};

} // namespace homlie
