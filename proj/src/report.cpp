#include "homlie/report.hpp"

namespace homlie {

const char *to_string(Status s)
{
	switch (s) {
	case Status::fail: return "fail";
	case Status::info: return "info";
	case Status::warning: return "warning";
	case Status::not_applicable: return "not-applicable";
	}
	return "?";
}

const char *to_string(Verdict v)
{
	switch (v) {
	case Verdict::pass: return "pass";
	case Verdict::fail: return "fail";
	case Verdict::not_applicable: return "not-applicable";
	}
	return "?";
}

void Report::add(Finding f)
{
	if (f.status == Status::fail) {
		if (counts_[f.check]++ >= max_failures_per_check)
			return;
	} else if (f.status == Status::not_applicable) {
		not_applicable_ = true;
	}
	findings_.push_back(std::move(f));
}

void Report::fail(const std::string &check, Tuple witness, std::optional<Vector> residual, std::string note)
{
	add(Finding{check, Status::fail, std::move(witness), std::move(residual), std::move(note)});
}

void Report::info(const std::string &check, std::string note)
{
	add(Finding{check, Status::info, std::nullopt, std::nullopt, std::move(note)});
}

void Report::warn(const std::string &check, std::string note)
{
	add(Finding{check, Status::warning, std::nullopt, std::nullopt, std::move(note)});
}

void Report::mark_not_applicable(const std::string &check, std::string note)
{
	add(Finding{check, Status::not_applicable, std::nullopt, std::nullopt, std::move(note)});
}

void Report::merge(const Report &other)
{
	std::map<std::string, std::size_t> kept;
	for (const auto &f : findings_)
		if (f.status == Status::fail)
			++kept[f.check];
	for (const auto &f : other.findings_)
		if (f.status != Status::fail || kept[f.check]++ < max_failures_per_check)
			findings_.push_back(f);
	for (const auto &[check, n] : other.counts_)
		counts_[check] += n;
	for (const auto &[k, v] : other.metrics_)
		metrics_[k] = v;
	not_applicable_ = not_applicable_ || other.not_applicable_;
}

Report Report::prefixed(const std::string &prefix, bool demote) const
{
	Report r(command_);
	for (auto f : findings_) {
		f.check = prefix + "/" + f.check;
		if (demote && f.status == Status::not_applicable)
			f.status = Status::info;
		r.findings_.push_back(std::move(f));
	}
	for (const auto &[check, n] : counts_)
		r.counts_[prefix + "/" + check] = n;
	for (const auto &[k, v] : metrics_)
		r.metrics_[prefix + "/" + k] = v;
	r.not_applicable_ = not_applicable_ && !demote;
	return r;
}

Verdict Report::verdict() const
{
	if (failures() > 0)
		return Verdict::fail;
	return not_applicable_ ? Verdict::not_applicable : Verdict::pass;
}

std::size_t Report::failures() const
{
	std::size_t n = 0;
	for (const auto &[check, c] : counts_)
		n += c;
	return n;
}

std::size_t Report::failures(const std::string &check) const
{
	auto it = counts_.find(check);
	return it == counts_.end() ? 0 : it->second;
}

const Finding *Report::first_failure(const std::string &check) const
{
	for (const auto &f : findings_)
		if (f.status == Status::fail && (check.empty() || f.check == check))
			return &f;
	return nullptr;
}

} // namespace homlie
