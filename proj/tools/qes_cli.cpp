// Command-line front end: list-families, build, verify, general.
//
// Settings are layered: built-in defaults, then a key=value config file
// (--config), then explicit flags.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qes/errors.hpp"
#include "qes/pipeline.hpp"

namespace {

using Settings = std::map<std::string, std::string>;

const std::vector<std::string> kParamKeys = {"omega", "alpha", "A", "B", "e2", "l", "beta", "a", "gamma", "eta"};
const std::vector<std::string> kOtherKeys = {"family", "n",       "sign",    "j-max",  "x-min",
                                             "x-max",  "samples", "fd-points", "out-dir", "algebra"};

double to_number(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw qes::ParameterError("--" + key + ": not a number: '" + text + "'");
  return value;
}

int to_integer(const std::string& key, const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw qes::ParameterError("--" + key + ": not an integer: '" + text + "'");
  return value;
}

int to_sign(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1" || text == "plus" || text == "upper") return +1;
  if (text == "-" || text == "-1" || text == "minus" || text == "lower") return -1;
  throw qes::ParameterError("--sign must be + or -, got '" + text + "'");
}

Settings read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qes::ParameterError("cannot read config file " + path);
  Settings out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw qes::ParameterError(path + ":" + std::to_string(number) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

qes::RunConfig to_config(qes::Command command, const Settings& s) {
  qes::RunConfig config;
  config.command = command;
  for (const auto& [key, value] : s) {
    if (std::find(kParamKeys.begin(), kParamKeys.end(), key) != kParamKeys.end()) {
      if (command == qes::Command::general && key == "a")
        config.offset = to_number(key, value);
      else
        config.params[key] = to_number(key, value);
    } else if (key == "family") {
      config.family = value;
    } else if (key == "n") {
      config.n = to_integer(key, value);
    } else if (key == "sign") {
      config.sign = to_sign(value);
    } else if (key == "j-max") {
      config.j_max = to_integer(key, value);
    } else if (key == "x-min") {
      config.x_min = to_number(key, value);
    } else if (key == "x-max") {
      config.x_max = to_number(key, value);
    } else if (key == "samples") {
      config.samples = to_integer(key, value);
    } else if (key == "fd-points") {
      config.fd_points = to_integer(key, value);
    } else if (key == "out-dir") {
      config.out_dir = value;
    } else if (key == "algebra") {
      config.algebra_path = value;
    } else {
      throw qes::ParameterError("unknown setting '" + key + "'");
    }
  }
  if (command == qes::Command::general && config.algebra_path.empty())
    throw qes::ParameterError("general mode needs --algebra");
  return config;
}

const std::map<std::string, std::string> kHelp = {
    {"family", "catalog key, e.g. harmonic or periodic-v1"},
    {"n", "spin index: highest polynomial degree"},
    {"sign", "+ or -, the algebraization branch of QES families"},
    {"j-max", "highest ES level reported"},
    {"x-min", "left end of the sample window"},
    {"x-max", "right end of the sample window"},
    {"samples", "number of sample points"},
    {"fd-points", "finite-difference grid size"},
    {"out-dir", "output directory (created if missing)"},
    {"algebra", "JSON file with the algebra coefficients"},
    {"a", "shift of the origin"},
};

std::string help_for(const std::string& key) {
  const auto it = kHelp.find(key);
  return it == kHelp.end() ? "family parameter" : it->second;
}

struct Subcommand {
  CLI::App* app;
  qes::Command command;
  std::map<std::string, CLI::Option*> options;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exactly and quasi-exactly solvable potentials from sl(2) algebra data"};
  app.require_subcommand(1);

  Settings raw;
  std::vector<Subcommand> subs;
  auto add = [&](const std::string& name, const std::string& help, qes::Command command,
                 const std::vector<std::string>& keys) {
    Subcommand sub{app.add_subcommand(name, help), command, {}};
    for (const auto& key : keys) sub.options[key] = sub.app->add_option("--" + key, raw[name + "/" + key], help_for(key));
    if (!keys.empty()) sub.app->add_option("--config", raw[name + "/config"], "key=value settings file (flags win)");
    subs.push_back(sub);
  };

  std::vector<std::string> catalog_keys = kParamKeys;
  for (const auto& k : kOtherKeys)
    if (k != "algebra") catalog_keys.push_back(k);
  const std::vector<std::string> general_keys = {"algebra", "a", "x-min", "x-max", "samples", "out-dir"};

  add("list-families", "print the catalog as JSON", qes::Command::list_families, {});
  add("build", "write potential, spectrum and wavefunction samples", qes::Command::build, catalog_keys);
  add("verify", "build, then check every level against the finite-difference solver", qes::Command::verify,
      catalog_keys);
  add("general", "raw algebra JSON through the full pipeline", qes::Command::general, general_keys);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qes::exit_usage;
  }

  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    try {
      Settings settings;
      const std::string& config_path = raw[sub.app->get_name() + "/config"];
      if (!config_path.empty()) settings = read_config(config_path);
      for (const auto& [key, option] : sub.options) {
        if (option->count() > 0) settings[key] = raw[sub.app->get_name() + "/" + key];
      }
      for (const auto& [key, value] : settings)
        if (!sub.options.count(key))
          throw qes::ParameterError("setting '" + key + "' does not apply to " + sub.app->get_name());
      return qes::run(to_config(sub.command, settings), std::cout, std::cerr);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return qes::exit_usage;
    }
  }
  return qes::exit_usage;
}
