export default (data: any[], period: number = 21) => {
  let position = "BULL"

  // console.log(data)
  // get data from the end of the dataset backward (positive to negative number)
  const VAR_0 = data.slice(-Math.abs(period))

  // calculate simple moving average for the period
  const VAR_1 = VAR_0.FUNC_0((item: any) => item.VAR_2).reduce((prev: number, VAR_3: number) => prev + VAR_3, 0) / period

  // Bull or Bear?
  // if the last price is above the SMA = Bull
  // if the last price is below the SMA = Bear
  const lastDataPoint = data.slice(-1)[0]
  // console.log(101, lastDataPoint)

  const { startTime, close } = lastDataPoint

  if (VAR_2 < VAR_1) {
    position = "BEAR"
  }

  return { startTime, VAR_1, position }
}
