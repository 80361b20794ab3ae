#include "xorcache/instance.hpp"

#include <stdexcept>
#include <string>

namespace xorcache {

ProblemInstance ProblemInstance::scheme_point(int n_files, int n_users) {
  if (n_files < 1 || n_users < 1) {
    throw std::invalid_argument("n_files and n_users must be >= 1");
  }
  ProblemInstance instance;
  instance.n_files = n_files;
  instance.n_users = n_users;
  instance.parts = (n_users == n_files) ? n_files : n_files * n_users;
  instance.cache_size = Rat(1, std::max(n_files, n_users));
  instance.validate();
  return instance;
}

void ProblemInstance::validate() const {
  if (n_files < 1) {
    throw std::invalid_argument("n_files must be >= 1, got " + std::to_string(n_files));
  }
  if (n_users < n_files) {
    throw std::invalid_argument("n_users (" + std::to_string(n_users) +
                                ") must be >= n_files (" + std::to_string(n_files) + ")");
  }
  const int expected_parts = (n_users == n_files) ? n_files : n_files * n_users;
  if (parts != expected_parts) {
    throw std::invalid_argument("parts must be " + std::to_string(expected_parts) + ", got " +
                                std::to_string(parts));
  }
  if (cache_size < Rat(0) || cache_size > Rat(1, n_users)) {
    throw std::invalid_argument("cache_size " + format_rat(cache_size) +
                                " outside [0, 1/" + std::to_string(n_users) + "]");
  }
}

DemandVector::DemandVector(std::vector<int> entries, int n_files)
    : entries_(std::move(entries)), counts_(static_cast<std::size_t>(n_files), 0), n_files_(n_files) {
  if (n_files < 1) {
    throw std::invalid_argument("n_files must be >= 1");
  }
  if (entries_.empty()) {
    throw std::invalid_argument("demand vector must not be empty");
  }
  for (const int file : entries_) {
    if (file < 1 || file > n_files) {
      throw std::invalid_argument("demand entry " + std::to_string(file) + " outside 1.." +
                                  std::to_string(n_files));
    }
    if (counts_[static_cast<std::size_t>(file) - 1]++ == 0) ++distinct_;
  }
}

std::vector<int> DemandVector::requesters_of(int file) const {
  std::vector<int> users;
  for (int user = 1; user <= n_users(); ++user) {
    if (file_for(user) == file) users.push_back(user);
  }
  return users;
}

}  // namespace xorcache
