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
  \file bool_circuit.hpp
  \brief Named-signal combinational circuit with primitive gates

  Sequential sources are accepted at parse time only: each flip-flop is cut
  into a pseudo primary input (its output signal) and a pseudo primary output
  (its data input), so every stored circuit is purely combinational.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tlgkit
{

/*! \brief Error raised by parsers and structural validation.
 *
 * `line` is 1-based; 0 means the error is not tied to a single line.
 */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& message, int line = 0 )
      : std::runtime_error( line > 0 ? "line " + std::to_string( line ) + ": " + message : message ),
        line_( line )
  {
  }

  int line() const { return line_; }

private:
  int line_;
};

enum class GateKind
{
  And,
  Or,
  Nand,
  Nor,
  Not,
  Xor,
  Xnor,
  Buf
};

inline const char* gate_kind_name( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::And:
    return "AND";
  case GateKind::Or:
    return "OR";
  case GateKind::Nand:
    return "NAND";
  case GateKind::Nor:
    return "NOR";
  case GateKind::Not:
    return "NOT";
  case GateKind::Xor:
    return "XOR";
  case GateKind::Xnor:
    return "XNOR";
  case GateKind::Buf:
    return "BUFF";
  }
  return "?";
}

inline int gate_min_fanins( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::Not:
  case GateKind::Buf:
    return 1;
  default:
    return 2;
  }
}

inline int gate_max_fanins( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::Not:
  case GateKind::Buf:
    return 1;
  default:
    return 1 << 30;
  }
}

/*! \brief Evaluates one gate over already-computed fanin words. */
inline uint64_t eval_gate_word( GateKind kind, const std::vector<uint64_t>& fanins )
{
  switch ( kind )
  {
  case GateKind::And:
  case GateKind::Nand:
  {
    uint64_t acc = ~uint64_t( 0 );
    for ( auto f : fanins )
    {
      acc &= f;
    }
    return kind == GateKind::And ? acc : ~acc;
  }
  case GateKind::Or:
  case GateKind::Nor:
  {
    uint64_t acc = 0;
    for ( auto f : fanins )
    {
      acc |= f;
    }
    return kind == GateKind::Or ? acc : ~acc;
  }
  case GateKind::Xor:
  case GateKind::Xnor:
  {
    uint64_t acc = 0;
    for ( auto f : fanins )
    {
      acc ^= f;
    }
    return kind == GateKind::Xor ? acc : ~acc;
  }
  case GateKind::Not:
    return ~fanins[0];
  case GateKind::Buf:
    return fanins[0];
  }
  return 0;
}

struct Gate
{
  std::string output;
  GateKind kind;
  std::vector<std::string> fanins;
  int line = 0; //!< source line for diagnostics, 0 if synthetic
};

/*! \brief A combinational circuit over named signals. */
class BoolCircuit
{
public:
  std::string name = "top";
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Gate> gates;
  int num_dffs_cut = 0; //!< flip-flops replaced by pseudo-PI/PO pairs

  void add_input( const std::string& signal ) { inputs.push_back( signal ); }
  void add_output( const std::string& signal ) { outputs.push_back( signal ); }

  void add_gate( const std::string& output, GateKind kind, std::vector<std::string> fanins,
                 int line = 0 )
  {
    gates.push_back( Gate{ output, kind, std::move( fanins ), line } );
  }

  /*! \brief Checks naming, connectivity, arity, and acyclicity.
   *
   * Throws parse_error on the first violation found.  On success the gate
   * list is left in topological order.
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
    for ( const auto& g : gates )
    {
      if ( !defined.insert( g.output ).second )
      {
        throw parse_error( "signal '" + g.output + "' defined more than once", g.line );
      }
      const int nf = static_cast<int>( g.fanins.size() );
      if ( nf < gate_min_fanins( g.kind ) || nf > gate_max_fanins( g.kind ) )
      {
        throw parse_error( std::string( gate_kind_name( g.kind ) ) + " gate '" + g.output +
                               "' has " + std::to_string( nf ) + " inputs",
                           g.line );
      }
    }
    for ( const auto& g : gates )
    {
      for ( const auto& f : g.fanins )
      {
        if ( !defined.count( f ) )
        {
          throw parse_error( "gate '" + g.output + "' reads undefined signal '" + f + "'", g.line );
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

  /*! \brief Reorders `gates` topologically; throws on combinational cycles. */
  void topo_sort()
  {
    std::unordered_map<std::string, size_t> producer;
    for ( size_t i = 0; i < gates.size(); ++i )
    {
      producer[gates[i].output] = i;
    }

    std::vector<int> state( gates.size(), 0 ); // 0 unseen, 1 on stack, 2 done
    std::vector<size_t> order;
    order.reserve( gates.size() );

    // iterative DFS to survive deep chains
    for ( size_t root = 0; root < gates.size(); ++root )
    {
      if ( state[root] != 0 )
      {
        continue;
      }
      std::vector<std::pair<size_t, size_t>> stack; // (gate index, next fanin)
      stack.emplace_back( root, 0 );
      state[root] = 1;
      while ( !stack.empty() )
      {
        auto& [gi, fi] = stack.back();
        if ( fi < gates[gi].fanins.size() )
        {
          const auto it = producer.find( gates[gi].fanins[fi] );
          ++fi;
          if ( it != producer.end() )
          {
            const size_t child = it->second;
            if ( state[child] == 1 )
            {
              throw parse_error( "combinational cycle through signal '" + gates[child].output + "'",
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

    std::vector<Gate> sorted;
    sorted.reserve( gates.size() );
    for ( auto gi : order )
    {
      sorted.push_back( std::move( gates[gi] ) );
    }
    gates = std::move( sorted );
  }

  std::optional<size_t> gate_index_of( const std::string& signal ) const
  {
    for ( size_t i = 0; i < gates.size(); ++i )
    {
      if ( gates[i].output == signal )
      {
        return i;
      }
    }
    return std::nullopt;
  }

  bool is_input( const std::string& signal ) const
  {
    return std::find( inputs.begin(), inputs.end(), signal ) != inputs.end();
  }

  /*! \brief Longest path length in gates from any input to any output. */
  int depth() const
  {
    std::unordered_map<std::string, int> level;
    for ( const auto& in : inputs )
    {
      level[in] = 0;
    }
    for ( const auto& g : gates )
    {
      int lv = 0;
      for ( const auto& f : g.fanins )
      {
        lv = std::max( lv, level.at( f ) );
      }
      level[g.output] = lv + 1;
    }
    int d = 0;
    for ( const auto& out : outputs )
    {
      d = std::max( d, level.at( out ) );
    }
    return d;
  }
};

} // namespace tlgkit
