// Recv gets the replied icmp packet
func (VAR_0 *Trace) FUNC_0(VAR_1, seq int) (ICMPResp, CLASS_0) {
	var (
		b    = FUNC_1([]CLASS_1, 512)
		ts   = VAR_2.FUNC_2()
		resp ICMPResp
		wID  bool
		wSeq bool
		wDst bool
	)
	for {
		n, VAR_3, VAR_4 := syscall.FUNC_3(VAR_0.fd, b, 0)
		if VAR_4 != nil {
			du, _ := VAR_2.FUNC_4(VAR_0.wait)
			if VAR_4 == syscall.EAGAIN && VAR_2.Since(ts) < du {
				continue
			}
			return resp, VAR_4
		}
		b = b[:n]
		if len(VAR_0.ip.FUNC_5()) == net.IPv4len {
			resp = icmpV4RespParser(b)
			wID = resp.typ == IPv4ICMPTypeEchoReply && VAR_1 != resp.VAR_1
			wSeq = seq != resp.seq
			wDst = resp.ip.dst.String() != VAR_0.ip.String()
		} else {
			resp = FUNC_6(b)
			resp.VAR_5 = net.IP(VAR_3.(*syscall.CLASS_2).VAR_6[:])
			wID = resp.typ == IPv6ICMPTypeEchoReply && VAR_1 != resp.VAR_1
			wSeq = seq != resp.seq
			wDst = resp.ip.dst.String() != VAR_0.ip.String()
		}
		if (VAR_0.icmp && wSeq) || wDst || wID {
			du, _ := VAR_2.FUNC_4(VAR_0.wait)
			if VAR_2.Since(ts) < du {
				continue
			}
			return resp, fmt.Errorf("wrong response")
		}
		break
	}
	return resp, nil
}
