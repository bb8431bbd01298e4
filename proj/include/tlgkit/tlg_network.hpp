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
  \file tlg_network.hpp
  \brief Networks of threshold logic gates

  A gate fires (outputs 1) when the weighted sum of its input values
  reaches its threshold: sum_j w_j x_j >= T.  Inputs marked as key inputs
  carry the locking bits; their weights may be zero (a disconnected key),
  while regular data inputs must have nonzero weight.
*/

#pragma once

#include "bool_circuit.hpp" // for parse_error
#include "truth_table.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tlgkit
{

struct TlgInput
{
  std::string signal;
  int weight = 0;
  bool is_key = false;
};

/*! \brief One threshold gate: fires when the weighted input sum reaches T. */
struct Tlg
{
  std::string output;
  std::vector<TlgInput> inputs;
  int threshold = 0;
  int line = 0; //!< source line for diagnostics, 0 if synthetic

  /*! \brief Sum of absolute weights, the gate's effective fanin load. */
  int weighted_fanin() const
  {
    int sum = 0;
    for ( const auto& in : inputs )
    {
      sum += std::abs( in.weight );
    }
    return sum;
  }

  int num_key_inputs() const
  {
    int cnt = 0;
    for ( const auto& in : inputs )
    {
      cnt += in.is_key ? 1 : 0;
    }
    return cnt;
  }
};

class TlgNetwork
{
public:
  std::string name = "top";
  std::vector<std::string> inputs;
  std::vector<std::string> key_inputs;
  std::vector<std::string> outputs;
  std::vector<Tlg> gates;

  void add_input( const std::string& signal ) { inputs.push_back( signal ); }
  void add_key_input( const std::string& signal ) { key_inputs.push_back( signal ); }
  void add_output( const std::string& signal ) { outputs.push_back( signal ); }
  void add_gate( Tlg gate ) { gates.push_back( std::move( gate ) ); }

  size_t num_gates() const { return gates.size(); }

  bool is_input( const std::string& signal ) const
  {
    return std::find( inputs.begin(), inputs.end(), signal ) != inputs.end();
  }

  bool is_key_input( const std::string& signal ) const
  {
    return std::find( key_inputs.begin(), key_inputs.end(), signal ) != key_inputs.end();
  }

  /*! \brief Checks naming, connectivity, weight rules, and acyclicity.
   *
   * Leaves the gate list topologically sorted on success.
   */
  void validate()
  {
    std::unordered_set<std::string> defined;
    for ( const auto& in : inputs )
    {
      if ( !defined.insert( in ).second )
      {
        throw parse_error( "signal '" + in + "' defined more than once" );
      }
    }
    for ( const auto& k : key_inputs )
    {
      if ( !defined.insert( k ).second )
      {
        throw parse_error( "signal '" + k + "' defined more than once" );
      }
    }
    for ( const auto& g : gates )
    {
      if ( !defined.insert( g.output ).second )
      {
        throw parse_error( "signal '" + g.output + "' defined more than once", g.line );
      }
      if ( g.inputs.empty() )
      {
        throw parse_error( "gate '" + g.output + "' has no inputs", g.line );
      }
      std::unordered_set<std::string> seen;
      for ( const auto& in : g.inputs )
      {
        if ( !seen.insert( in.signal ).second )
        {
          throw parse_error( "gate '" + g.output + "' reads '" + in.signal + "' twice", g.line );
        }
        if ( in.weight == 0 && !in.is_key )
        {
          throw parse_error( "gate '" + g.output + "' gives data input '" + in.signal +
                                 "' weight zero",
                             g.line );
        }
      }
    }
    for ( const auto& g : gates )
    {
      for ( const auto& in : g.inputs )
      {
        if ( !defined.count( in.signal ) )
        {
          throw parse_error( "gate '" + g.output + "' reads undefined signal '" + in.signal + "'",
                             g.line );
        }
        if ( in.is_key != is_key_input( in.signal ) )
        {
          throw parse_error( "gate '" + g.output + "' disagrees about key status of '" +
                                 in.signal + "'",
                             g.line );
        }
      }
    }
    for ( const auto& out : outputs )
    {
      if ( !defined.count( out ) )
      {
        throw parse_error( "output '" + out + "' is never defined" );
      }
    }
    topo_sort();
  }

  void topo_sort()
  {
    std::unordered_map<std::string, size_t> producer;
    for ( size_t i = 0; i < gates.size(); ++i )
    {
      producer[gates[i].output] = i;
    }
    std::vector<int> state( gates.size(), 0 );
    std::vector<size_t> order;
    order.reserve( gates.size() );
    for ( size_t root = 0; root < gates.size(); ++root )
    {
      if ( state[root] != 0 )
      {
        continue;
      }
      std::vector<std::pair<size_t, size_t>> stack;
      stack.emplace_back( root, 0 );
      state[root] = 1;
      while ( !stack.empty() )
      {
        auto& [gi, fi] = stack.back();
        if ( fi < gates[gi].inputs.size() )
        {
          const auto it = producer.find( gates[gi].inputs[fi].signal );
          ++fi;
          if ( it != producer.end() )
          {
            const size_t child = it->second;
            if ( state[child] == 1 )
            {
              throw parse_error( "cycle through signal '" + gates[child].output + "'",
                                 gates[child].line );
            }
            if ( state[child] == 0 )
            {
              state[child] = 1;
              stack.emplace_back( child, 0 );
            }
          }
        }
        else
        {
          state[gi] = 2;
          order.push_back( gi );
          stack.pop_back();
        }
      }
    }
    std::vector<Tlg> sorted;
    sorted.reserve( gates.size() );
    for ( auto gi : order )
    {
      sorted.push_back( std::move( gates[gi] ) );
    }
    gates = std::move( sorted );
  }

  /*! \brief Longest gate path from any input to any output. */
  int depth() const
  {
    std::unordered_map<std::string, int> level;
    for ( const auto& in : inputs )
    {
      level[in] = 0;
    }
    for ( const auto& k : key_inputs )
    {
      level[k] = 0;
    }
    int d = 0;
    for ( const auto& g : gates )
    {
      int lv = 0;
      for ( const auto& in : g.inputs )
      {
        lv = std::max( lv, level.at( in.signal ) );
      }
      level[g.output] = lv + 1;
    }
    for ( const auto& out : outputs )
    {
      d = std::max( d, level.at( out ) );
    }
    return d;
  }

  /*! \brief Truth table of one gate over its inputs in declaration order. */
  static TruthTable gate_function( const Tlg& gate )
  {
    const int n = static_cast<int>( gate.inputs.size() );
    TruthTable tt( n );
    for ( uint32_t m = 0; m < tt.num_bits(); ++m )
    {
      int sum = 0;
      for ( int i = 0; i < n; ++i )
      {
        if ( ( m >> i ) & 1u )
        {
          sum += gate.inputs[i].weight;
        }
      }
      tt.set_bit( m, sum >= gate.threshold );
    }
    return tt;
  }
};

/*! \brief Compiled fixed-slot evaluator over 64 parallel vectors.
 *
 * Slot order: primary inputs, then key inputs, then gates topologically.
 */
class TlgEvaluator
{
public:
  explicit TlgEvaluator( const TlgNetwork& net )
  {
    slot_of_.reserve( net.inputs.size() + net.key_inputs.size() + net.gates.size() );
    for ( const auto& in : net.inputs )
    {
      slot_of_.emplace( in, static_cast<int>( slot_of_.size() ) );
    }
    num_inputs_ = static_cast<int>( net.inputs.size() );
    for ( const auto& k : net.key_inputs )
    {
      slot_of_.emplace( k, static_cast<int>( slot_of_.size() ) );
    }
    num_keys_ = static_cast<int>( net.key_inputs.size() );
    for ( const auto& g : net.gates )
    {
      CompiledGate cg;
      cg.threshold = g.threshold;
      for ( const auto& in : g.inputs )
      {
        cg.fanins.emplace_back( slot_of_.at( in.signal ), in.weight );
      }
      slot_of_.emplace( g.output, static_cast<int>( slot_of_.size() ) );
      gates_.push_back( std::move( cg ) );
    }
    for ( const auto& o : net.outputs )
    {
      output_slots_.push_back( slot_of_.at( o ) );
    }
  }

  int num_inputs() const { return num_inputs_; }
  int num_keys() const { return num_keys_; }
  int num_outputs() const { return static_cast<int>( output_slots_.size() ); }

  /*! \brief 64-lane evaluation; each gate sums weights per lane. */
  std::vector<uint64_t> eval_words( const std::vector<uint64_t>& input_words,
                                    const std::vector<uint64_t>& key_words ) const
  {
    std::vector<uint64_t> slots( slot_of_.size() );
    for ( int i = 0; i < num_inputs_; ++i )
    {
      slots[i] = input_words[i];
    }
    for ( int k = 0; k < num_keys_; ++k )
    {
      slots[num_inputs_ + k] = key_words[k];
    }
    size_t s = num_inputs_ + num_keys_;
    int sums[64];
    for ( const auto& g : gates_ )
    {
      std::fill( sums, sums + 64, 0 );
      for ( const auto& [slot, weight] : g.fanins )
      {
        uint64_t w = slots[slot];
        while ( w )
        {
          const int lane = std::countr_zero( w );
          sums[lane] += weight;
          w &= w - 1;
        }
      }
      uint64_t out = 0;
      for ( int lane = 0; lane < 64; ++lane )
      {
        if ( sums[lane] >= g.threshold )
        {
          out |= uint64_t( 1 ) << lane;
        }
      }
      slots[s++] = out;
    }
    std::vector<uint64_t> result;
    result.reserve( output_slots_.size() );
    for ( auto os : output_slots_ )
    {
      result.push_back( slots[os] );
    }
    return result;
  }

  /*! \brief Single-vector evaluation with separate data and key bits. */
  std::vector<bool> eval( const std::vector<bool>& input_bits,
                          const std::vector<bool>& key_bits ) const
  {
    std::vector<uint64_t> iw( input_bits.size() ), kw( key_bits.size() );
    for ( size_t i = 0; i < input_bits.size(); ++i )
    {
      iw[i] = input_bits[i] ? ~uint64_t( 0 ) : 0;
    }
    for ( size_t k = 0; k < key_bits.size(); ++k )
    {
      kw[k] = key_bits[k] ? ~uint64_t( 0 ) : 0;
    }
    const auto words = eval_words( iw, kw );
    std::vector<bool> out( words.size() );
    for ( size_t i = 0; i < words.size(); ++i )
    {
      out[i] = words[i] & 1u;
    }
    return out;
  }

private:
  struct CompiledGate
  {
    std::vector<std::pair<int, int>> fanins; //!< (slot, weight)
    int threshold;
  };

  int num_inputs_ = 0;
  int num_keys_ = 0;
  std::vector<CompiledGate> gates_;
  std::vector<int> output_slots_;
  std::unordered_map<std::string, int> slot_of_;
};

} // namespace tlgkit
