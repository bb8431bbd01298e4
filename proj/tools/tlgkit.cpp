/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file tlgkit.cpp
  \brief Command-line driver for the synthesis, locking, and attack flow

  Every invocation runs one subcommand and prints exactly one JSON
  record to standard output; tabular data additionally lands in CSV
  files on request.  Exit codes: 0 success, 2 usage or parse error,
  3 verification failure, 4 timeout.
*/

#include <tlgkit/tlgkit.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace tlgkit;
using ordered_json = nlohmann::ordered_json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_verification = 3;
constexpr int exit_timeout = 4;

std::string path_stem( const std::string& path )
{
  std::string stem = path;
  if ( const auto slash = stem.find_last_of( '/' ); slash != std::string::npos )
  {
    stem = stem.substr( slash + 1 );
  }
  if ( const auto dot = stem.find_last_of( '.' ); dot != std::string::npos && dot > 0 )
  {
    stem = stem.substr( 0, dot );
  }
  return stem.empty() ? "top" : stem;
}

bool has_suffix( const std::string& text, const std::string& suffix )
{
  return text.size() >= suffix.size() &&
         text.compare( text.size() - suffix.size(), suffix.size(), suffix ) == 0;
}

/*! \brief Loads a gate-level circuit, telling BENCH from BLIF by suffix. */
BoolCircuit load_circuit( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  if ( has_suffix( path, ".bench" ) )
  {
    return parse_bench( in, path_stem( path ) );
  }
  if ( has_suffix( path, ".blif" ) )
  {
    return parse_blif( in );
  }
  throw parse_error( "'" + path + "' is neither a .bench nor a .blif file" );
}

/*! \brief Resolves a style argument: a stock name or a coefficient file. */
GateStyle load_style( const std::string& spec )
{
  if ( spec == "lctl" )
  {
    return lctl_style();
  }
  if ( spec == "crtl" )
  {
    return crtl_style();
  }
  std::ifstream in( spec );
  if ( !in )
  {
    throw parse_error( "style must be lctl, crtl, or a readable file; got '" + spec + "'" );
  }
  return parse_gate_style( in );
}

ordered_json style_json( const GateStyle& style )
{
  ordered_json j;
  j["name"] = style.name;
  j["area_base"] = style.area_base;
  j["area_per_fanin"] = style.area_per_fanin;
  j["power_base"] = style.power_base;
  j["power_per_fanin"] = style.power_per_fanin;
  j["delay_per_level"] = style.delay_per_level;
  return j;
}

std::string key_string( const KeyVector& key )
{
  std::string bits;
  bits.reserve( key.size() );
  for ( const bool b : key )
  {
    bits.push_back( b ? '1' : '0' );
  }
  return bits;
}

std::vector<int> parse_weight_list( const std::string& spec )
{
  std::vector<int> weights;
  std::stringstream ss( spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    weights.push_back( detail::parse_int( detail::strip_ws( item ), 0 ) );
  }
  if ( weights.empty() )
  {
    throw parse_error( "weight list '" + spec + "' holds no numbers" );
  }
  return weights;
}

ordered_json report_header( const std::string& subcommand,
                            const std::vector<std::string>& inputs )
{
  ordered_json j;
  j["schema"] = "tlgkit-run-1";
  j["subcommand"] = subcommand;
  j["inputs"] = inputs;
  return j;
}

/*! \brief Runs a subcommand body, emitting the one report every run owes. */
int guarded( const std::string& subcommand, const std::function<int( ordered_json& )>& body )
{
  const auto start = std::chrono::steady_clock::now();
  ordered_json report;
  int code = exit_ok;
  try
  {
    code = body( report );
  }
  catch ( const solve_budget_exceeded& e )
  {
    report["error"] = e.what();
    code = exit_timeout;
  }
  catch ( const parse_error& e )
  {
    report["error"] = e.what();
    code = exit_usage;
  }
  catch ( const std::invalid_argument& e )
  {
    report["error"] = e.what();
    code = exit_usage;
  }
  catch ( const std::exception& e )
  {
    report["error"] = e.what();
    code = exit_verification;
  }
  if ( !report.contains( "schema" ) )
  {
    ordered_json wrapped = report_header( subcommand, {} );
    wrapped.update( report );
    report = std::move( wrapped );
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report["wall_time"] = elapsed.count();
  std::cout << report.dump( 2 ) << "\n";
  if ( report.contains( "error" ) )
  {
    std::cerr << "tlgkit " << subcommand << ": " << report["error"].get<std::string>()
              << "\n";
  }
  return code;
}

struct SynthArgs
{
  std::string input;
  std::string output;
  int cut_size = 6;
  int weight_bound = 0;
  bool merge = false;
  std::string name;
};

int run_synth( const SynthArgs& args, ordered_json& report )
{
  report = report_header( "synth", { args.input } );
  report["config"] = { { "cut_size", args.cut_size },
                       { "weight_bound", args.weight_bound },
                       { "merge", args.merge } };

  auto circ = load_circuit( args.input );
  MapParams params;
  params.cuts.cut_size = args.cut_size;
  params.identify.max_weight_sum = args.weight_bound;
  MapStats map_stats;
  auto net = map_to_tlg( circ, params, &map_stats );
  net.name = args.name.empty() ? circ.name : args.name;

  MergeStats merge_stats;
  if ( args.merge )
  {
    net = merge_network( net, {}, &merge_stats );
  }
  write_tlg_file( net, args.output );

  ordered_json result;
  result["circuit"] = net.name;
  result["inputs"] = net.inputs.size();
  result["outputs"] = net.outputs.size();
  result["gates"] = net.num_gates();
  result["depth"] = network_depth( net );
  result["merges"] = args.merge ? merge_stats.merges : 0;
  result["netlist"] = args.output;
  report["result"] = std::move( result );
  return exit_ok;
}

struct LockArgs
{
  std::string input;
  std::string output;
  std::string keyfile;
  int keys = 0;
  int percent = 50;
  uint64_t seed = 1;
  double rho = 1.0;
};

int run_lock( const LockArgs& args, ordered_json& report )
{
  report = report_header( "lock", { args.input } );
  report["config"] = { { "keys", args.keys },
                       { "percent", args.percent },
                       { "seed", args.seed },
                       { "rho", args.rho } };

  const auto net = read_tlg( args.input );
  if ( !net.key_inputs.empty() )
  {
    throw parse_error( "'" + args.input + "' is already locked" );
  }
  const auto locked = lock_network( net, args.keys, args.percent, args.seed, args.rho );

  // the lock is only worth writing out if the correct key provably
  // restores the original behaviour
  const bool verified = verify_unlock( locked, locked.correct_key, net );

  ordered_json result;
  result["circuit"] = net.name;
  result["key_bits"] = locked.key_names.size();
  result["locked_gates"] = locked.locked_gate_ids.size();
  result["total_gates"] = net.num_gates();
  result["verified"] = verified;
  if ( !verified )
  {
    report["result"] = std::move( result );
    std::cerr << "tlgkit lock: the correct key does not restore the design\n";
    return exit_verification;
  }

  write_tlg_file( locked.network, args.output );
  write_key_file( locked.correct_key, args.keyfile );
  result["netlist"] = args.output;
  result["keyfile"] = args.keyfile;
  report["result"] = std::move( result );
  return exit_ok;
}

struct AttackArgs
{
  std::string locked;
  std::string oracle;
  double timeout = 3600.0;
  std::string solver = "internal";
};

int run_attack( const AttackArgs& args, ordered_json& report )
{
  report = report_header( "attack", { args.locked, args.oracle } );
  report["config"] = { { "timeout", args.timeout }, { "solver", args.solver } };

  const auto locked = locked_from_network( read_tlg( args.locked ) );
  const auto oracle = load_circuit( args.oracle );

  AttackOptions options;
  options.budget = args.timeout;
  if ( args.solver != "internal" )
  {
    const std::string prefix = "dimacs:";
    if ( args.solver.rfind( prefix, 0 ) != 0 || args.solver.size() == prefix.size() )
    {
      throw parse_error( "solver must be internal or dimacs:<command>" );
    }
    options.dimacs_command = args.solver.substr( prefix.size() );
  }

  const auto outcome = sat_attack( locked, oracle, options );

  const size_t gates = locked.network.num_gates();
  ordered_json result;
  result["circuit"] = locked.network.name;
  result["keys"] = locked.key_names.size();
  result["percent"] =
      gates == 0 ? 0.0 : 100.0 * double( locked.locked_gate_ids.size() ) / double( gates );
  result["status"] = to_string( outcome.status );
  result["dip_count"] = outcome.dip_count;
  result["conflicts"] = outcome.conflicts;
  result["decisions"] = outcome.decisions;
  result["cpu_time"] = outcome.cpu_time;
  // a miter that is contradictory before the first pattern means no key
  // can explain the oracle at all; call that out instead of burying it
  result["first_iteration_unsat"] =
      outcome.status == AttackStatus::UnsatNoKey && outcome.dip_count == 0;
  if ( outcome.key )
  {
    result["key"] = key_string( *outcome.key );
  }
  report["result"] = std::move( result );

  switch ( outcome.status )
  {
  case AttackStatus::Recovered:
    return exit_ok;
  case AttackStatus::Timeout:
    return exit_timeout;
  case AttackStatus::UnsatNoKey:
  default:
    return exit_verification;
  }
}

struct CorruptArgs
{
  std::string locked;
  std::string oracle;
  std::string keyfile;
  std::string mode = "exhaustive";
  int samples = 256;
  int sample_inputs = 1024;
  uint64_t seed = 1;
  bool per_output_bits = false;
  std::string csv;
};

int run_corrupt( const CorruptArgs& args, ordered_json& report )
{
  report = report_header( "corrupt", { args.locked, args.oracle, args.keyfile } );
  report["config"] = { { "mode", args.mode },
                       { "samples", args.samples },
                       { "sample_inputs", args.sample_inputs },
                       { "seed", args.seed },
                       { "per_output_bits", args.per_output_bits } };

  const auto locked = locked_from_network( read_tlg( args.locked ), read_key( args.keyfile ) );
  const auto oracle = load_circuit( args.oracle );

  CorruptionOptions options;
  options.mode =
      args.mode == "exhaustive" ? SamplingMode::Exhaustive : SamplingMode::MonteCarlo;
  options.seed = args.seed;
  options.sample_keys = args.samples;
  options.sample_inputs = args.sample_inputs;
  options.per_output_bits = args.per_output_bits;

  const auto rates = corruption_rate( locked, oracle, options );

  if ( !args.csv.empty() )
  {
    std::ofstream out( args.csv );
    if ( !out )
    {
      throw parse_error( "cannot write '" + args.csv + "'" );
    }
    write_csv( rates, out );
  }

  ordered_json result;
  result["circuit"] = rates.circuit;
  result["mode"] = to_string( rates.mode );
  result["wrong_keys"] = rates.keys.size();
  result["mean"] = rates.mean;
  result["max"] = rates.max;
  result["correct_key_mismatch"] = rates.correct_key_mismatch;
  result["locked_fraction"] = rates.locked_fraction;
  result["key_weights"] = rates.key_weights;
  if ( !args.csv.empty() )
  {
    result["csv"] = args.csv;
  }
  report["result"] = std::move( result );
  return exit_ok;
}

struct SweepArgs
{
  std::string input;
  std::string weights = "0,1,2,3,4,5,6";
  int trials = 64;
  uint64_t seed = 1;
  int key_bits = 2;
  std::string style = "lctl";
  std::string csv;
};

int run_sweep( const SweepArgs& args, ordered_json& report )
{
  report = report_header( "sweep", { args.input } );
  report["config"] = { { "weights", args.weights },
                       { "trials", args.trials },
                       { "seed", args.seed },
                       { "key_bits", args.key_bits },
                       { "style", args.style } };

  const auto base = read_tlg( args.input );
  SweepOptions options;
  options.key_bits = args.key_bits;
  options.style = load_style( args.style );
  report["config"]["style_coefficients"] = style_json( options.style );

  const auto points =
      key_weight_sweep( base, parse_weight_list( args.weights ), args.trials, args.seed,
                        options );

  if ( !args.csv.empty() )
  {
    std::ofstream out( args.csv );
    if ( !out )
    {
      throw parse_error( "cannot write '" + args.csv + "'" );
    }
    write_csv( points, out );
  }

  ordered_json rows = ordered_json::array();
  for ( const auto& p : points )
  {
    rows.push_back( { { "total_weight", p.total_weight },
                     { "corruption", p.corruption },
                     { "corruption_max", p.corruption_max },
                     { "area", p.area },
                     { "power", p.power },
                     { "delay", p.delay },
                     { "trials", p.trials } } );
  }
  ordered_json result;
  result["circuit"] = base.name;
  result["points"] = std::move( rows );
  if ( !args.csv.empty() )
  {
    result["csv"] = args.csv;
  }
  report["result"] = std::move( result );
  return exit_ok;
}

struct CostArgs
{
  std::string input;
  std::string style = "lctl";
};

int run_cost( const CostArgs& args, ordered_json& report )
{
  report = report_header( "cost", { args.input } );

  const auto net = read_tlg( args.input );
  const auto style = load_style( args.style );
  report["config"] = { { "style", args.style } };
  report["config"]["style_coefficients"] = style_json( style );
  if ( style.name == crtl_style().name )
  {
    // the charge-recycling numbers are calibrated as fixed fractions of
    // the latch-type ones; echo the fractions so reports are comparable
    report["config"]["calibration_vs_lctl"] = {
      { "area", crtl_style().area_base / lctl_style().area_base },
      { "power", crtl_style().power_base / lctl_style().power_base },
      { "delay", crtl_style().delay_per_level / lctl_style().delay_per_level } };
  }

  const auto cost = estimate( net, style );
  ordered_json result;
  result["circuit"] = net.name;
  result["gates"] = net.num_gates();
  result["depth"] = network_depth( net );
  result["area"] = cost.area;
  result["power"] = cost.power;
  result["delay"] = cost.delay;
  report["result"] = std::move( result );
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "threshold logic synthesis, locking, and key-recovery analysis" };
  app.require_subcommand( 1 );
  int code = exit_ok;

  SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand( "synth", "synthesize a BENCH or BLIF circuit into a TLG netlist" );
  synth_cmd->add_option( "input", synth.input, "circuit file (.bench or .blif)" )->required();
  synth_cmd->add_option( "output", synth.output, "TLG netlist to write" )->required();
  synth_cmd->add_option( "--cut-size", synth.cut_size, "cut size for matching" )
      ->capture_default_str()
      ->check( CLI::Range( 2, 8 ) );
  synth_cmd->add_option( "--weight-bound", synth.weight_bound,
                         "cap on summed weights per gate, 0 = automatic" )
      ->capture_default_str()
      ->check( CLI::NonNegativeNumber );
  synth_cmd->add_flag( "--merge", synth.merge, "merge threshold gate pairs after mapping" );
  synth_cmd->add_option( "--name", synth.name, "name for the written network" );
  synth_cmd->callback( [&] { code = guarded( "synth", [&]( ordered_json& r ) { return run_synth( synth, r ); } ); } );

  LockArgs lock;
  auto* lock_cmd = app.add_subcommand( "lock", "embed key inputs into a TLG netlist" );
  lock_cmd->add_option( "input", lock.input, "TLG netlist to lock" )->required();
  lock_cmd->add_option( "output", lock.output, "locked netlist to write" )->required();
  lock_cmd->add_option( "keyfile", lock.keyfile, "key file to write" )->required();
  lock_cmd->add_option( "--keys", lock.keys, "number of key bits" )
      ->required()
      ->check( CLI::PositiveNumber );
  lock_cmd->add_option( "--percent", lock.percent, "share of gates to lock" )
      ->capture_default_str()
      ->check( CLI::Range( 1, 100 ) );
  lock_cmd->add_option( "--seed", lock.seed, "random seed" )->capture_default_str();
  lock_cmd->add_option( "--rho", lock.rho, "key weight scale relative to gate load" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  lock_cmd->callback( [&] { code = guarded( "lock", [&]( ordered_json& r ) { return run_lock( lock, r ); } ); } );

  AttackArgs attack;
  auto* attack_cmd =
      app.add_subcommand( "attack", "recover the key of a locked netlist with oracle access" );
  attack_cmd->add_option( "locked", attack.locked, "locked TLG netlist" )->required();
  attack_cmd->add_option( "oracle", attack.oracle, "oracle circuit (.bench or .blif)" )
      ->required();
  attack_cmd->add_option( "--timeout", attack.timeout, "budget in seconds" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  attack_cmd->add_option( "--solver", attack.solver, "internal or dimacs:<command>" )
      ->capture_default_str();
  attack_cmd->callback( [&] { code = guarded( "attack", [&]( ordered_json& r ) { return run_attack( attack, r ); } ); } );

  CorruptArgs corrupt;
  auto* corrupt_cmd =
      app.add_subcommand( "corrupt", "measure output corruption under wrong keys" );
  corrupt_cmd->add_option( "locked", corrupt.locked, "locked TLG netlist" )->required();
  corrupt_cmd->add_option( "oracle", corrupt.oracle, "reference circuit (.bench or .blif)" )
      ->required();
  corrupt_cmd->add_option( "--key", corrupt.keyfile, "key file for the locked netlist" )
      ->required();
  corrupt_cmd->add_option( "--mode", corrupt.mode, "enumeration strategy" )
      ->capture_default_str()
      ->check( CLI::IsMember( { "exhaustive", "monte-carlo" } ) );
  corrupt_cmd->add_option( "--samples", corrupt.samples, "wrong keys drawn in monte-carlo mode" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  corrupt_cmd
      ->add_option( "--sample-inputs", corrupt.sample_inputs,
                    "input vectors per sampled key in monte-carlo mode" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  corrupt_cmd->add_option( "--seed", corrupt.seed, "random seed" )->capture_default_str();
  corrupt_cmd->add_flag( "--per-output-bits", corrupt.per_output_bits,
                         "count differing output bits instead of differing vectors" );
  corrupt_cmd->add_option( "--csv", corrupt.csv, "write per-key rows to this CSV file" );
  corrupt_cmd->callback( [&] { code = guarded( "corrupt", [&]( ordered_json& r ) { return run_corrupt( corrupt, r ); } ); } );

  SweepArgs sweep;
  auto* sweep_cmd =
      app.add_subcommand( "sweep", "trade corruption against cost over total key weight" );
  sweep_cmd->add_option( "input", sweep.input, "unlocked TLG netlist" )->required();
  sweep_cmd->add_option( "--weights", sweep.weights, "comma-separated total weights" )
      ->capture_default_str();
  sweep_cmd->add_option( "--trials", sweep.trials, "random lockings per weight" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  sweep_cmd->add_option( "--seed", sweep.seed, "random seed" )->capture_default_str();
  sweep_cmd->add_option( "--key-bits", sweep.key_bits, "key bits per locking" )
      ->capture_default_str()
      ->check( CLI::PositiveNumber );
  sweep_cmd->add_option( "--style", sweep.style, "lctl, crtl, or a coefficient file" )
      ->capture_default_str();
  sweep_cmd->add_option( "--csv", sweep.csv, "write sweep points to this CSV file" );
  sweep_cmd->callback( [&] { code = guarded( "sweep", [&]( ordered_json& r ) { return run_sweep( sweep, r ); } ); } );

  CostArgs cost;
  auto* cost_cmd = app.add_subcommand( "cost", "estimate area, power, and delay proxies" );
  cost_cmd->add_option( "input", cost.input, "TLG netlist" )->required();
  cost_cmd->add_option( "--style", cost.style, "lctl, crtl, or a coefficient file" )
      ->capture_default_str();
  cost_cmd->callback( [&] { code = guarded( "cost", [&]( ordered_json& r ) { return run_cost( cost, r ); } ); } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int parse_code = app.exit( e );
    return parse_code == 0 ? exit_ok : exit_usage;
  }
  return code;
}
