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
  \file simulation.hpp
  \brief Bit-parallel circuit simulation

  A simulation word carries 64 input vectors at once.  The compiled
  evaluator resolves signal names to dense slots once, so repeated
  evaluation costs no hashing.
*/

#pragma once

#include "bool_circuit.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

/*! \brief Single-vector assignment of signal values. */
using Assignment = std::unordered_map<std::string, bool>;

/*! \brief 64 parallel vectors per signal. */
using WordAssignment = std::unordered_map<std::string, uint64_t>;

/*! \brief Word whose lane `v` holds bit `i` of vector number `block*64+v`.
 *
 * Enumerating blocks `0 .. 2^(n-6)` with these words walks all `2^n`
 * assignments of `n` variables in natural order.
 */
inline uint64_t simulation_pattern( int var, uint64_t block )
{
  static constexpr uint64_t masks[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };
  if ( var < 6 )
  {
    return masks[var];
  }
  return ( ( block >> ( var - 6 ) ) & 1u ) ? ~uint64_t( 0 ) : 0;
}

/*! \brief Circuit compiled to slot indices for fast repeated evaluation. */
class CircuitEvaluator
{
public:
  explicit CircuitEvaluator( const BoolCircuit& circ )
  {
    slot_of_.reserve( circ.inputs.size() + circ.gates.size() );
    for ( const auto& in : circ.inputs )
    {
      slot_of_.emplace( in, static_cast<int>( slot_of_.size() ) );
    }
    num_inputs_ = static_cast<int>( circ.inputs.size() );
    for ( const auto& g : circ.gates )
    {
      CompiledGate cg;
      cg.kind = g.kind;
      for ( const auto& f : g.fanins )
      {
        cg.fanins.push_back( slot_of_.at( f ) );
      }
      slot_of_.emplace( g.output, static_cast<int>( slot_of_.size() ) );
      gates_.push_back( std::move( cg ) );
    }
    for ( const auto& o : circ.outputs )
    {
      output_slots_.push_back( slot_of_.at( o ) );
    }
  }

  int num_inputs() const { return num_inputs_; }
  int num_outputs() const { return static_cast<int>( output_slots_.size() ); }

  /*! \brief Evaluates 64 vectors; `input_words[i]` feeds input number `i`. */
  std::vector<uint64_t> eval_words( const std::vector<uint64_t>& input_words ) const
  {
    std::vector<uint64_t> slots( slot_of_.size() );
    for ( int i = 0; i < num_inputs_; ++i )
    {
      slots[i] = input_words[i];
    }
    size_t s = num_inputs_;
    std::vector<uint64_t> fan;
    for ( const auto& g : gates_ )
    {
      fan.clear();
      for ( auto fi : g.fanins )
      {
        fan.push_back( slots[fi] );
      }
      slots[s++] = eval_gate_word( g.kind, fan );
    }
    std::vector<uint64_t> out;
    out.reserve( output_slots_.size() );
    for ( auto os : output_slots_ )
    {
      out.push_back( slots[os] );
    }
    return out;
  }

  /*! \brief Evaluates one vector given input bits in declaration order. */
  std::vector<bool> eval( const std::vector<bool>& input_bits ) const
  {
    std::vector<uint64_t> words( input_bits.size() );
    for ( size_t i = 0; i < input_bits.size(); ++i )
    {
      words[i] = input_bits[i] ? ~uint64_t( 0 ) : 0;
    }
    const auto out_words = eval_words( words );
    std::vector<bool> out( out_words.size() );
    for ( size_t i = 0; i < out_words.size(); ++i )
    {
      out[i] = out_words[i] & 1u;
    }
    return out;
  }

  int slot( const std::string& signal ) const { return slot_of_.at( signal ); }

private:
  struct CompiledGate
  {
    GateKind kind;
    std::vector<int> fanins;
  };

  int num_inputs_ = 0;
  std::vector<CompiledGate> gates_;
  std::vector<int> output_slots_;
  std::unordered_map<std::string, int> slot_of_;
};

/*! \brief Evaluates every signal on one named assignment. */
inline Assignment simulate_all( const BoolCircuit& circ, const Assignment& input_values )
{
  Assignment values;
  std::vector<uint64_t> fan;
  for ( const auto& in : circ.inputs )
  {
    values[in] = input_values.at( in );
  }
  for ( const auto& g : circ.gates )
  {
    fan.clear();
    for ( const auto& f : g.fanins )
    {
      fan.push_back( values.at( f ) ? ~uint64_t( 0 ) : 0 );
    }
    values[g.output] = eval_gate_word( g.kind, fan ) & 1u;
  }
  return values;
}

/*! \brief Evaluates the primary outputs on one named assignment. */
inline std::vector<bool> simulate( const BoolCircuit& circ, const Assignment& input_values )
{
  const auto values = simulate_all( circ, input_values );
  std::vector<bool> out;
  out.reserve( circ.outputs.size() );
  for ( const auto& o : circ.outputs )
  {
    out.push_back( values.at( o ) );
  }
  return out;
}

} // namespace tlgkit
