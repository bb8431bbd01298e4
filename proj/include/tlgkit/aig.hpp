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
  \file aig.hpp
  \brief And-inverter graph with structural hashing

  A literal is `2 * node + complement`; node 0 is constant false, the next
  `num_pis` nodes are the primary inputs, and every further node is a
  two-input AND.  Nodes are created fanins-first, so index order is always
  topological.  Wide gates become balanced binary trees; an XOR costs three
  AND nodes.
*/

#pragma once

#include "bool_circuit.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

class Aig
{
public:
  using literal = uint32_t;

  static constexpr literal const0 = 0;
  static constexpr literal const1 = 1;

  static literal make_lit( uint32_t node, bool complement = false )
  {
    return 2 * node + ( complement ? 1 : 0 );
  }
  static uint32_t lit_node( literal l ) { return l >> 1; }
  static bool lit_complement( literal l ) { return l & 1; }
  static literal lit_not( literal l ) { return l ^ 1; }

  Aig()
  {
    nodes_.push_back( NodeData{ 0, 0 } ); // constant node
  }

  literal add_input( const std::string& name )
  {
    const uint32_t node = static_cast<uint32_t>( nodes_.size() );
    nodes_.push_back( NodeData{ 0, 0 } );
    input_names_.push_back( name );
    return make_lit( node );
  }

  void add_output( const std::string& name, literal l )
  {
    output_names_.push_back( name );
    output_lits_.push_back( l );
  }

  literal and2( literal a, literal b )
  {
    // constant and trivial cases first
    if ( a > b )
    {
      std::swap( a, b );
    }
    if ( a == const0 )
    {
      return const0;
    }
    if ( a == const1 )
    {
      return b;
    }
    if ( a == b )
    {
      return a;
    }
    if ( lit_node( a ) == lit_node( b ) )
    {
      return const0; // a & !a
    }
    const uint64_t key = ( static_cast<uint64_t>( a ) << 32 ) | b;
    if ( const auto it = strash_.find( key ); it != strash_.end() )
    {
      return make_lit( it->second );
    }
    const uint32_t node = static_cast<uint32_t>( nodes_.size() );
    nodes_.push_back( NodeData{ a, b } );
    strash_.emplace( key, node );
    return make_lit( node );
  }

  literal or2( literal a, literal b ) { return lit_not( and2( lit_not( a ), lit_not( b ) ) ); }

  literal xor2( literal a, literal b )
  {
    const literal p = and2( a, lit_not( b ) );
    const literal q = and2( lit_not( a ), b );
    return or2( p, q );
  }

  literal and_n( const std::vector<literal>& lits ) { return balance( lits, 0, lits.size(), false ); }
  literal or_n( const std::vector<literal>& lits ) { return balance( lits, 0, lits.size(), true ); }

  literal xor_n( const std::vector<literal>& lits )
  {
    return xor_balance( lits, 0, lits.size() );
  }

  uint32_t num_nodes() const { return static_cast<uint32_t>( nodes_.size() ); }
  uint32_t num_pis() const { return static_cast<uint32_t>( input_names_.size() ); }
  uint32_t num_ands() const { return num_nodes() - num_pis() - 1; }
  uint32_t num_pos() const { return static_cast<uint32_t>( output_lits_.size() ); }

  bool is_and( uint32_t node ) const { return node > num_pis(); }
  bool is_pi( uint32_t node ) const { return node >= 1 && node <= num_pis(); }
  uint32_t pi_index( uint32_t node ) const { return node - 1; }

  literal fanin0( uint32_t node ) const { return nodes_[node].fanin0; }
  literal fanin1( uint32_t node ) const { return nodes_[node].fanin1; }

  const std::vector<std::string>& input_names() const { return input_names_; }
  const std::vector<std::string>& output_names() const { return output_names_; }
  const std::vector<literal>& output_lits() const { return output_lits_; }

  /*! \brief One simulation word per node; `input_words[i]` feeds input `i`. */
  std::vector<uint64_t> simulate_words( const std::vector<uint64_t>& input_words ) const
  {
    std::vector<uint64_t> value( nodes_.size() );
    value[0] = 0;
    for ( uint32_t n = 1; n <= num_pis(); ++n )
    {
      value[n] = input_words[n - 1];
    }
    for ( uint32_t n = num_pis() + 1; n < num_nodes(); ++n )
    {
      value[n] = lit_word( value, nodes_[n].fanin0 ) & lit_word( value, nodes_[n].fanin1 );
    }
    return value;
  }

  static uint64_t lit_word( const std::vector<uint64_t>& node_values, literal l )
  {
    const uint64_t v = node_values[lit_node( l )];
    return lit_complement( l ) ? ~v : v;
  }

  /*! \brief Levels with inputs at 0; complement edges are free. */
  std::vector<int> levels() const
  {
    std::vector<int> lv( nodes_.size(), 0 );
    for ( uint32_t n = num_pis() + 1; n < num_nodes(); ++n )
    {
      lv[n] = 1 + std::max( lv[lit_node( nodes_[n].fanin0 )], lv[lit_node( nodes_[n].fanin1 )] );
    }
    return lv;
  }

  /*! \brief Number of AND nodes reading each node. */
  std::vector<int> fanout_counts() const
  {
    std::vector<int> fc( nodes_.size(), 0 );
    for ( uint32_t n = num_pis() + 1; n < num_nodes(); ++n )
    {
      ++fc[lit_node( nodes_[n].fanin0 )];
      ++fc[lit_node( nodes_[n].fanin1 )];
    }
    for ( auto l : output_lits_ )
    {
      ++fc[lit_node( l )];
    }
    return fc;
  }

private:
  struct NodeData
  {
    literal fanin0;
    literal fanin1;
  };

  literal balance( const std::vector<literal>& lits, size_t begin, size_t end, bool disjunction )
  {
    if ( end == begin )
    {
      return disjunction ? const0 : const1;
    }
    if ( end - begin == 1 )
    {
      return lits[begin];
    }
    const size_t mid = begin + ( end - begin ) / 2;
    const literal l = balance( lits, begin, mid, disjunction );
    const literal r = balance( lits, mid, end, disjunction );
    return disjunction ? or2( l, r ) : and2( l, r );
  }

  literal xor_balance( const std::vector<literal>& lits, size_t begin, size_t end )
  {
    if ( end == begin )
    {
      return const0;
    }
    if ( end - begin == 1 )
    {
      return lits[begin];
    }
    const size_t mid = begin + ( end - begin ) / 2;
    return xor2( xor_balance( lits, begin, mid ), xor_balance( lits, mid, end ) );
  }

  std::vector<NodeData> nodes_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
  std::vector<literal> output_lits_;
  std::unordered_map<uint64_t, uint32_t> strash_;
};

/*! \brief Converts a primitive-gate circuit into a structurally hashed AIG. */
inline Aig to_aig( const BoolCircuit& circ )
{
  Aig aig;
  std::unordered_map<std::string, Aig::literal> lit_of;
  for ( const auto& in : circ.inputs )
  {
    lit_of[in] = aig.add_input( in );
  }
  for ( const auto& g : circ.gates )
  {
    std::vector<Aig::literal> fan;
    fan.reserve( g.fanins.size() );
    for ( const auto& f : g.fanins )
    {
      fan.push_back( lit_of.at( f ) );
    }
    Aig::literal l = 0;
    switch ( g.kind )
    {
    case GateKind::And:
      l = aig.and_n( fan );
      break;
    case GateKind::Nand:
      l = Aig::lit_not( aig.and_n( fan ) );
      break;
    case GateKind::Or:
      l = aig.or_n( fan );
      break;
    case GateKind::Nor:
      l = Aig::lit_not( aig.or_n( fan ) );
      break;
    case GateKind::Xor:
      l = aig.xor_n( fan );
      break;
    case GateKind::Xnor:
      l = Aig::lit_not( aig.xor_n( fan ) );
      break;
    case GateKind::Not:
      l = Aig::lit_not( fan[0] );
      break;
    case GateKind::Buf:
      l = fan[0];
      break;
    }
    lit_of[g.output] = l;
  }
  for ( const auto& o : circ.outputs )
  {
    aig.add_output( o, lit_of.at( o ) );
  }
  return aig;
}

} // namespace tlgkit
